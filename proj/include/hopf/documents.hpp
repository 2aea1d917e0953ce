#pragma once

// JSON and CSV forms of matrices, certificates, reports and sweep tables.
//
// Integers are written as JSON numbers when they fit a signed 64-bit value and
// as decimal strings otherwise; both forms are accepted on input. All objects
// are emitted with sorted keys.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hopf/enumeration.hpp"
#include "hopf/hopf_calculus.hpp"

namespace hopf {

using json = nlohmann::json;

inline constexpr std::string_view kConvention = "columns-are-images-alpha-beta-gamma";
inline constexpr std::string_view kCertificateOrder =
    "output = left_factors[0] * ... * left_factors[n-1] * input * right_factors[0] * ... * "
    "right_factors[m-1]";
inline constexpr std::string_view kSweepCsvHeader =
    "a,b,p,c,d,q,mu,homology_hopf,rank,invariant_factors";

struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json integer_to_json(const Integer& v);
Integer integer_from_json(const json& j);

json matrix_to_json(const IntMatrix& m);
/// Throws DocumentError unless `j` is a rows x cols array of integers.
IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);

/// "1,0,1,0,1,0,0,0,-1" -> 3x3 row-major. Throws DocumentError.
IntMatrix parse_matrix_arg(std::string_view text);
/// "2,3,5" -> three integers. Throws DocumentError.
std::array<Integer, 3> parse_triple_arg(std::string_view text);

struct MatrixDocument {
  GluingMatrix matrix;
  std::string convention = std::string(kConvention);
  std::optional<std::string> zeta_variant;
};

/// Validates shape and |det| = 1; throws DocumentError.
MatrixDocument parse_matrix_document(std::string_view text);
json matrix_document_to_json(const MatrixDocument& doc);

struct CertificateDocument {
  ReductionCertificate certificate;
  std::optional<std::string> zeta_variant;
  bool orientation_normalized = false;

  friend bool operator==(const CertificateDocument&, const CertificateDocument&) = default;
};

CertificateDocument parse_certificate_document(std::string_view text);
json certificate_document_to_json(const CertificateDocument& doc);

json group_to_json(const FgAbelianGroup& g);

/// det, g, h, gcd, homology_hopf and the fundamental group of X_m.
json classify_report(const GluingMatrix& m);

std::string sweep_to_csv(const SweepResult& result);
json sweep_to_json(const SweepResult& result);

}  // namespace hopf

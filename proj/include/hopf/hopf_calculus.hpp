#pragma once

// Gluing calculus for X_phi = (T^2 x D^2) u_phi (T^2 x D^2).
//
// Convention: a boundary map of the 3-torus is recorded by the 3x3 matrix whose
// columns are the images of the ordered basis (alpha, beta, gamma), with gamma
// the meridian of the disc factor. Composition of maps is the matrix product,
// left of right: (f o g)_* = f_* * g_*.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopf/abelian.hpp"
#include "hopf/exact_linalg.hpp"

namespace hopf {

struct NotHomologyHopfError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OrientationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// 3x3 unimodular gluing matrix. Entries are addressed 0-based.
class GluingMatrix {
 public:
  explicit GluingMatrix(UnimodularMatrix m);
  explicit GluingMatrix(IntMatrix m) : GluingMatrix(UnimodularMatrix(std::move(m))) {}

  [[nodiscard]] const IntMatrix& matrix() const { return m_.matrix(); }
  [[nodiscard]] const UnimodularMatrix& unimodular() const { return m_; }
  [[nodiscard]] int det() const { return m_.det(); }

  [[nodiscard]] const Integer& g() const { return m_(0, 2); }
  [[nodiscard]] const Integer& h() const { return m_(1, 2); }
  [[nodiscard]] const Integer& k() const { return m_(2, 2); }

  friend bool operator==(const GluingMatrix& a, const GluingMatrix& b) { return a.m_ == b.m_; }

 private:
  UnimodularMatrix m_;
};

/// Data of one logarithmic transformation: direction (a, b), signed meridian
/// coefficient p, and an Sl(3,Z) matrix whose third column is (a, b, p).
class LogTransformParams {
 public:
  /// Uses complete_primitive_to_sl3 for the completion.
  LogTransformParams(Integer a, Integer b, Integer p);
  /// Throws if `completion` has det != +1 or its third column is not (a, b, p).
  LogTransformParams(Integer a, Integer b, Integer p, UnimodularMatrix completion);

  [[nodiscard]] const Integer& a() const { return a_; }
  [[nodiscard]] const Integer& b() const { return b_; }
  [[nodiscard]] const Integer& p() const { return p_; }
  [[nodiscard]] const UnimodularMatrix& completion() const { return completion_; }
  [[nodiscard]] Integer multiplicity() const { return p_ < 0 ? Integer(-p_) : p_; }

 private:
  Integer a_, b_, p_;
  UnimodularMatrix completion_;
};

/// [[a, c, 1], [b, d, 0], [0, 0, 1]] with ad - bc = 1.
class NormalForm {
 public:
  /// Throws std::invalid_argument unless `block` is 2x2 with det 1.
  explicit NormalForm(IntMatrix block);

  [[nodiscard]] const IntMatrix& block() const { return block_; }
  [[nodiscard]] IntMatrix matrix() const;

  /// True iff `m` has exactly the normal-form shape.
  static bool has_shape(const IntMatrix& m);

 private:
  IntMatrix block_;
};

/// left_factors[0] * ... * left_factors[n-1] * input * right_factors[0] * ... = output
struct ReductionCertificate {
  IntMatrix input = IntMatrix::identity(3);
  std::vector<IntMatrix> left_factors;
  std::vector<IntMatrix> right_factors;
  IntMatrix output = IntMatrix::identity(3);

  friend bool operator==(const ReductionCertificate&, const ReductionCertificate&) = default;
};

struct CertificateCheck {
  bool valid = true;
  /// Empty when valid, otherwise e.g. "left_factors[1] is not extendable".
  std::string failure;
};

/// D * zeta * D' for D, D' in {I, diag(1,1,-1)}.
enum class ZetaVariant { Raw, FlipLeft, FlipRight, FlipBoth };

std::string_view zeta_variant_name(ZetaVariant v);
std::optional<ZetaVariant> parse_zeta_variant(std::string_view name);

/// The Hopf gluing: alpha -> alpha, beta -> beta, gamma -> alpha gamma^-1. det -1.
GluingMatrix zeta_matrix();
GluingMatrix zeta_matrix(ZetaVariant variant);

/// Third column (0, 0, 1), entry (2,2) = +1 and det +1.
bool is_extendable(const IntMatrix& m);
bool is_extendable(const GluingMatrix& m);

/// Right-multiplies by diag(1,1,-1) when det = -1.
GluingMatrix normalize_to_sl3(const GluingMatrix& m);

/// Z + Z/gcd(g,h); gcd(0,0) = 0 gives Z^2.
FgAbelianGroup pi1_single_gluing(const GluingMatrix& m);

bool is_homology_hopf(const GluingMatrix& m);

/// inverse(plus.completion) * zeta * minus.completion
GluingMatrix compose_two_fiber(const LogTransformParams& plus, const LogTransformParams& minus,
                               ZetaVariant variant = ZetaVariant::Raw);

/// Abelian group on (alpha, beta, gamma) with relations (a+p, b, -p) and (c, d, q).
FgAbelianGroup pi1_two_log_transforms(const Integer& a, const Integer& b, const Integer& p,
                                      const Integer& c, const Integer& d, const Integer& q);

/// Reduction by extendable moves: left Sl(2,Z) carrying (g,h) to (1,0), left
/// shear fixing k = 1, right shear clearing e and f. Identity moves are omitted.
std::pair<NormalForm, ReductionCertificate> reduce_to_normal_form(const GluingMatrix& m);

/// As reduce_to_normal_form, then one more right factor reaching
/// [[1,0,1],[0,1,0],[0,0,1]]. Throws std::logic_error if that target is missed.
ReductionCertificate reduce_to_standard(const GluingMatrix& m);

IntMatrix standard_form_matrix();

CertificateCheck check_certificate(const ReductionCertificate& cert);
bool verify_certificate(const ReductionCertificate& cert);

IntMatrix framing_block(const NormalForm& n);

// Calibration of the zeta sign convention against the presentation route.

/// Seeded primitive triple with entries in [-bound, bound].
std::array<Integer, 3> random_primitive_triple(std::uint64_t seed, long bound);

/// Seeded matrix of extendable shape (Sl(2,Z) block, free bottom row).
UnimodularMatrix random_extendable(std::uint64_t seed, std::size_t word_length);

/// complete_primitive_to_sl3(v) times a seeded extendable matrix; third column stays v.
UnimodularMatrix random_completion(const std::array<Integer, 3>& v, std::uint64_t seed);

/// True iff both pi1 routes agree on `samples` seeded random pairs under `variant`.
bool variant_agrees(ZetaVariant variant, std::uint64_t seed, std::size_t samples);

/// First variant (Raw, FlipLeft, FlipRight, FlipBoth) on which both routes agree.
/// Throws std::runtime_error if none does.
ZetaVariant calibrate_zeta(std::uint64_t seed, std::size_t samples);

/// calibrate_zeta with the fixed default seed and sample count, computed once.
ZetaVariant calibrated_zeta();

}  // namespace hopf

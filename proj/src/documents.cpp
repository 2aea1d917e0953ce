#include "hopf/documents.hpp"

#include <limits>
#include <regex>
#include <sstream>

namespace hopf {

namespace {

Integer parse_integer_text(std::string_view text) {
  static const std::regex kInteger(R"(\s*[-+]?[0-9]+\s*)");
  const std::string s(text);
  if (!std::regex_match(s, kInteger)) throw DocumentError("not an integer: '" + s + "'");
  std::string digits;
  for (char ch : s)
    if (ch != ' ' && ch != '\t' && ch != '+') digits += ch;
  return Integer(digits, 10);
}

std::vector<Integer> parse_integer_list(std::string_view text) {
  std::vector<Integer> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_integer_text(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
}

const json& require_key(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw DocumentError(std::string("missing key \"") + key + "\"");
  }
  return obj.at(key);
}

std::vector<IntMatrix> factors_from_json(const json& j, const char* key) {
  if (!j.is_array()) throw DocumentError(std::string("\"") + key + "\" must be an array");
  std::vector<IntMatrix> out;
  for (const auto& m : j) out.push_back(matrix_from_json(m, 3, 3));
  return out;
}

json factors_to_json(const std::vector<IntMatrix>& factors) {
  json arr = json::array();
  for (const auto& f : factors) arr.push_back(matrix_to_json(f));
  return arr;
}

std::string join_factors(const FgAbelianGroup& g) {
  std::string out;
  for (const auto& f : g.invariant_factors()) out += (out.empty() ? "" : "|") + f.get_str();
  return out;
}

json record_to_json(const SweepRecord& r) {
  static constexpr const char* kNames[] = {"a", "b", "p", "c", "d", "q"};
  json j;
  for (std::size_t i = 0; i < 6; ++i) j[kNames[i]] = integer_to_json(r.params[i]);
  j["mu"] = integer_to_json(r.mu);
  j["homology_hopf"] = r.homology_hopf;
  j["group"] = group_to_json(r.group);
  if (r.matrix) j["matrix"] = matrix_to_json(*r.matrix);
  return j;
}

}  // namespace

json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()), 10);
    return Integer(std::to_string(j.get<std::int64_t>()), 10);
  }
  if (j.is_string()) return parse_integer_text(j.get<std::string>());
  throw DocumentError("expected an integer, got " + j.dump());
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  const std::string shape = std::to_string(rows) + "x" + std::to_string(cols);
  if (!j.is_array() || j.size() != rows) throw DocumentError("matrix must be " + shape);
  std::vector<Integer> entries;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw DocumentError("matrix must be " + shape);
    for (const auto& v : row) entries.push_back(integer_from_json(v));
  }
  return IntMatrix(rows, cols, std::move(entries));
}

IntMatrix parse_matrix_arg(std::string_view text) {
  auto entries = parse_integer_list(text);
  if (entries.size() != 9) {
    throw DocumentError("expected 9 comma-separated integers, got " +
                        std::to_string(entries.size()));
  }
  return IntMatrix(3, 3, std::move(entries));
}

std::array<Integer, 3> parse_triple_arg(std::string_view text) {
  auto entries = parse_integer_list(text);
  if (entries.size() != 3) {
    throw DocumentError("expected 3 comma-separated integers, got " +
                        std::to_string(entries.size()));
  }
  return {entries[0], entries[1], entries[2]};
}

MatrixDocument parse_matrix_document(std::string_view text) {
  const json doc = parse_json(text);
  IntMatrix m = matrix_from_json(require_key(doc, "matrix"), 3, 3);
  std::optional<GluingMatrix> glued;
  try {
    glued.emplace(std::move(m));
  } catch (const NotUnimodularError& e) {
    throw DocumentError(std::string("matrix is not unimodular: ") + e.what());
  }
  MatrixDocument out{*glued, std::string(kConvention), std::nullopt};
  if (doc.contains("convention")) {
    if (!doc["convention"].is_string()) throw DocumentError("\"convention\" must be a string");
    out.convention = doc["convention"].get<std::string>();
    if (out.convention != kConvention) {
      throw DocumentError("unsupported convention \"" + out.convention + "\"");
    }
  }
  if (doc.contains("zeta_variant")) {
    if (!doc["zeta_variant"].is_string() ||
        !parse_zeta_variant(doc["zeta_variant"].get<std::string>())) {
      throw DocumentError("unknown zeta_variant " + doc["zeta_variant"].dump());
    }
    out.zeta_variant = doc["zeta_variant"].get<std::string>();
  }
  return out;
}

json matrix_document_to_json(const MatrixDocument& doc) {
  json j;
  j["matrix"] = matrix_to_json(doc.matrix.matrix());
  j["convention"] = doc.convention;
  if (doc.zeta_variant) j["zeta_variant"] = *doc.zeta_variant;
  return j;
}

CertificateDocument parse_certificate_document(std::string_view text) {
  const json doc = parse_json(text);
  CertificateDocument out;
  out.certificate.input = matrix_from_json(require_key(doc, "input"), 3, 3);
  out.certificate.output = matrix_from_json(require_key(doc, "output"), 3, 3);
  out.certificate.left_factors = factors_from_json(require_key(doc, "left_factors"), "left_factors");
  out.certificate.right_factors =
      factors_from_json(require_key(doc, "right_factors"), "right_factors");
  if (doc.contains("order") && doc["order"] != kCertificateOrder) {
    throw DocumentError("unsupported factor order " + doc["order"].dump());
  }
  if (doc.contains("zeta_variant")) {
    if (!doc["zeta_variant"].is_string()) throw DocumentError("\"zeta_variant\" must be a string");
    out.zeta_variant = doc["zeta_variant"].get<std::string>();
  }
  if (doc.contains("orientation_normalized")) {
    if (!doc["orientation_normalized"].is_boolean()) {
      throw DocumentError("\"orientation_normalized\" must be a boolean");
    }
    out.orientation_normalized = doc["orientation_normalized"].get<bool>();
  }
  return out;
}

json certificate_document_to_json(const CertificateDocument& doc) {
  json j;
  j["input"] = matrix_to_json(doc.certificate.input);
  j["output"] = matrix_to_json(doc.certificate.output);
  j["left_factors"] = factors_to_json(doc.certificate.left_factors);
  j["right_factors"] = factors_to_json(doc.certificate.right_factors);
  j["order"] = kCertificateOrder;
  j["convention"] = kConvention;
  j["orientation_normalized"] = doc.orientation_normalized;
  if (doc.zeta_variant) j["zeta_variant"] = *doc.zeta_variant;
  return j;
}

json group_to_json(const FgAbelianGroup& g) {
  json factors = json::array();
  for (const auto& f : g.invariant_factors()) factors.push_back(integer_to_json(f));
  return json{{"rank", g.rank()}, {"invariant_factors", std::move(factors)}};
}

json classify_report(const GluingMatrix& m) {
  const Integer mu = gcd(m.g(), m.h());
  json j;
  j["matrix"] = matrix_to_json(m.matrix());
  j["det"] = m.det();
  j["g"] = integer_to_json(m.g());
  j["h"] = integer_to_json(m.h());
  j["gcd"] = integer_to_json(mu);
  j["homology_hopf"] = is_homology_hopf(m);
  j["group"] = group_to_json(pi1_single_gluing(m));
  return j;
}

std::string sweep_to_csv(const SweepResult& result) {
  std::ostringstream os;
  os << kSweepCsvHeader << '\n';
  for (const auto& r : result.records) {
    for (const auto& v : r.params) os << v.get_str() << ',';
    os << r.mu.get_str() << ',' << (r.homology_hopf ? "true" : "false") << ',' << r.group.rank()
       << ',' << join_factors(r.group) << '\n';
  }
  return os.str();
}

json sweep_to_json(const SweepResult& result) {
  json records = json::array();
  for (const auto& r : result.records) records.push_back(record_to_json(r));
  const SweepSummary s = summarize(result.records);
  json by_mu = json::object();
  for (const auto& [mu, count] : s.by_mu) by_mu[mu.get_str()] = count;
  json summary{{"total", s.total},
               {"homology_hopf", s.homology_hopf},
               {"by_mu", std::move(by_mu)},
               {"skipped", result.skipped},
               {"filtered", result.filtered}};
  return json{{"records", std::move(records)}, {"summary", std::move(summary)}};
}

}  // namespace hopf

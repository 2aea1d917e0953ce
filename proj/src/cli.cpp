#include "hopf/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hopf/documents.hpp"
#include "hopf/enumeration.hpp"
#include "hopf/selftest.hpp"

namespace hopf::cli {

namespace {

struct Options {
  std::string matrix;
  std::string file;
  std::string plus, minus;
  std::string plus_completion, minus_completion;
  bool standard = false;
  std::string p_range, q_range;
  std::string direction_plus = "1,0";
  std::string direction_minus = "1,0";
  std::optional<std::size_t> random;
  std::uint64_t seed = 0;
  std::size_t word_length = 12;
  std::string format = "csv";
  int threads = 0;
  bool serial = false;
  bool homology_hopf_only = false;
  std::size_t samples = 200;
};

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_input(const Options& opt, std::istream& in) {
  if (opt.file.empty() || opt.file == "-") return read_all(in);
  std::ifstream f(opt.file);
  if (!f) throw DocumentError("cannot open " + opt.file);
  return read_all(f);
}

MatrixDocument load_matrix(const Options& opt, std::istream& in) {
  if (!opt.matrix.empty()) {
    try {
      return MatrixDocument{GluingMatrix(parse_matrix_arg(opt.matrix)), std::string(kConvention),
                            std::nullopt};
    } catch (const NotUnimodularError& e) {
      throw DocumentError(std::string("matrix is not unimodular: ") + e.what());
    }
  }
  return parse_matrix_document(read_input(opt, in));
}

std::string zeta_name() { return std::string(zeta_variant_name(calibrated_zeta())); }

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

IntRange parse_range(const std::string& text, const char* flag) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw DocumentError(std::string(flag) + " expects lo:hi, got '" + text + "'");
  }
  try {
    std::size_t used_lo = 0, used_hi = 0;
    const std::string lo = text.substr(0, colon), hi = text.substr(colon + 1);
    IntRange r{std::stoll(lo, &used_lo), std::stoll(hi, &used_hi)};
    if (used_lo != lo.size() || used_hi != hi.size()) throw std::invalid_argument(text);
    return r;
  } catch (const std::logic_error&) {
    throw DocumentError(std::string(flag) + " expects lo:hi, got '" + text + "'");
  }
}

std::pair<std::int64_t, std::int64_t> parse_direction(const std::string& text, const char* flag) {
  std::istringstream is(text);
  std::int64_t a = 0, b = 0;
  char comma = 0;
  if (!(is >> a >> comma >> b) || comma != ',' || !(is >> std::ws).eof()) {
    throw DocumentError(std::string(flag) + " expects a,b, got '" + text + "'");
  }
  return {a, b};
}

int cmd_classify(const Options& opt, std::istream& in, std::ostream& out) {
  const MatrixDocument doc = load_matrix(opt, in);
  json report = classify_report(doc.matrix);
  report["convention"] = kConvention;
  report["zeta_variant"] = zeta_name();
  emit(out, report);
  return kOk;
}

int cmd_compose(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto pv = parse_triple_arg(opt.plus);
  const auto mv = parse_triple_arg(opt.minus);
  auto make = [](const std::array<Integer, 3>& v, const std::string& completion) {
    if (completion.empty()) return LogTransformParams(v[0], v[1], v[2]);
    try {
      return LogTransformParams(v[0], v[1], v[2], UnimodularMatrix(parse_matrix_arg(completion)));
    } catch (const std::invalid_argument& e) {
      throw DocumentError(std::string("bad completion: ") + e.what());
    }
  };
  std::optional<LogTransformParams> plus, minus;
  try {
    plus.emplace(make(pv, opt.plus_completion));
    minus.emplace(make(mv, opt.minus_completion));
  } catch (const NotPrimitiveError& e) {
    throw DocumentError(e.what());
  }

  const ZetaVariant variant = calibrated_zeta();
  const GluingMatrix composed = compose_two_fiber(*plus, *minus, variant);
  const FgAbelianGroup direct = pi1_two_log_transforms(pv[0], pv[1], pv[2], mv[0], mv[1], mv[2]);
  const bool agreement = is_isomorphic(direct, pi1_single_gluing(composed));

  auto side = [](const LogTransformParams& p) {
    return json{{"direction", json::array({integer_to_json(p.a()), integer_to_json(p.b())})},
                {"meridian", integer_to_json(p.p())},
                {"multiplicity", integer_to_json(p.multiplicity())},
                {"completion", matrix_to_json(p.completion().matrix())}};
  };
  json report;
  report["plus"] = side(*plus);
  report["minus"] = side(*minus);
  report["composed"] = matrix_to_json(composed.matrix());
  report["classification"] = classify_report(composed);
  report["direct_group"] = group_to_json(direct);
  report["agreement"] = agreement;
  report["convention"] = kConvention;
  report["zeta_variant"] = std::string(zeta_variant_name(variant));
  emit(out, report);
  if (!agreement) {
    err << "error: presentation group " << direct.to_string() << " disagrees with gluing group "
        << pi1_single_gluing(composed).to_string() << '\n';
    return kDisagreement;
  }
  return kOk;
}

int cmd_reduce(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  const MatrixDocument doc = load_matrix(opt, in);
  const GluingMatrix m = normalize_to_sl3(doc.matrix);
  if (!is_homology_hopf(m)) {
    err << "error: not a homology Hopf surface: gcd(g,h) = gcd(" << m.g().get_str() << ","
        << m.h().get_str() << ") = " << gcd(m.g(), m.h()).get_str() << '\n';
    return kNotHopf;
  }
  CertificateDocument cert_doc;
  cert_doc.certificate = opt.standard ? reduce_to_standard(m) : reduce_to_normal_form(m).second;
  cert_doc.zeta_variant = zeta_name();
  cert_doc.orientation_normalized = doc.matrix.det() == -1;
  emit(out, certificate_document_to_json(cert_doc));
  return kOk;
}

int cmd_verify(const Options& opt, std::istream& in, std::ostream& out) {
  const CertificateDocument doc = parse_certificate_document(read_input(opt, in));
  const CertificateCheck check = check_certificate(doc.certificate);
  if (check.valid) {
    out << "VALID\n";
    return kOk;
  }
  out << "INVALID: " << check.failure << '\n';
  return kInvalid;
}

int cmd_sweep(const Options& opt, std::ostream& out) {
  SweepSpec spec;
  if (opt.random) {
    if (!opt.p_range.empty() || !opt.q_range.empty()) {
      throw DocumentError("--random cannot be combined with --p-range/--q-range");
    }
    spec.mode = SweepMode::Matrix;
    spec.sample_count = *opt.random;
    spec.seed = opt.seed;
    spec.word_length = opt.word_length;
  } else {
    if (opt.p_range.empty() || opt.q_range.empty()) {
      throw DocumentError("sweep needs --p-range and --q-range, or --random N");
    }
    const auto [a, b] = parse_direction(opt.direction_plus, "--direction-plus");
    const auto [c, d] = parse_direction(opt.direction_minus, "--direction-minus");
    spec.ranges = {IntRange{a, a},
                   IntRange{b, b},
                   parse_range(opt.p_range, "--p-range"),
                   IntRange{c, c},
                   IntRange{d, d},
                   parse_range(opt.q_range, "--q-range")};
  }
  spec.homology_hopf_only = opt.homology_hopf_only;
  spec.zeta = calibrated_zeta();
  try {
    validate(spec);
  } catch (const SweepSpecError& e) {
    throw DocumentError(e.what());
  }
  const SweepResult result = opt.serial ? sweep_serial(spec) : sweep_parallel(spec, opt.threads);
  if (opt.format == "json") {
    json doc = sweep_to_json(result);
    doc["zeta_variant"] = zeta_name();
    doc["convention"] = kConvention;
    emit(out, doc);
  } else {
    out << sweep_to_csv(result);
  }
  return kOk;
}

int cmd_selftest(const Options& opt, std::ostream& out) {
  const auto outcomes = run_selftest(out, opt.samples);
  const bool ok = std::all_of(outcomes.begin(), outcomes.end(),
                              [](const SuiteOutcome& o) { return o.ok(); });
  out << (ok ? "SELFTEST OK" : "SELFTEST FAILED") << '\n';
  return ok ? kOk : kFailure;
}

}  // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gluing calculus for logarithmic transformations on the Hopf surface", "hopfctl"};
  app.require_subcommand(1);
  Options opt;

  auto add_matrix_input = [&opt](CLI::App* sub) {
    auto* m = sub->add_option("--matrix", opt.matrix, "9 comma-separated integers, row-major");
    sub->add_option("--file", opt.file, "MatrixDocument JSON path ('-' or absent: stdin)")
        ->excludes(m);
  };

  auto* classify = app.add_subcommand("classify", "fundamental group and homology-Hopf test");
  add_matrix_input(classify);

  auto* compose = app.add_subcommand("compose", "two-fibre gluing phi+^-1 . zeta . phi-");
  compose->add_option("--plus", opt.plus, "a,b,p")->required();
  compose->add_option("--minus", opt.minus, "c,d,q")->required();
  compose->add_option("--plus-completion", opt.plus_completion, "9 integers, det +1");
  compose->add_option("--minus-completion", opt.minus_completion, "9 integers, det +1");

  auto* reduce = app.add_subcommand("reduce", "emit a reduction certificate");
  add_matrix_input(reduce);
  reduce->add_flag("--standard", opt.standard, "reduce all the way to [[1,0,1],[0,1,0],[0,0,1]]");

  auto* verify = app.add_subcommand("verify", "check a certificate document");
  verify->add_option("--file", opt.file, "CertificateDocument JSON path ('-' or absent: stdin)");

  auto* sweep = app.add_subcommand("sweep", "tabulate mu over log-transform parameters");
  sweep->add_option("--p-range", opt.p_range, "lo:hi (use --p-range=-3:3 for negatives)");
  sweep->add_option("--q-range", opt.q_range, "lo:hi");
  sweep->add_option("--direction-plus", opt.direction_plus, "a,b")->capture_default_str();
  sweep->add_option("--direction-minus", opt.direction_minus, "c,d")->capture_default_str();
  sweep->add_option("--random", opt.random, "random_sl3 sample pairs instead of a box");
  sweep->add_option("--seed", opt.seed, "seed for --random")->capture_default_str();
  sweep->add_option("--word-length", opt.word_length, "elementary factors per sample")
      ->capture_default_str();
  sweep->add_option("--format", opt.format)->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sweep->add_option("--threads", opt.threads, "OpenMP threads (0: default)");
  sweep->add_flag("--serial", opt.serial, "use the serial reference path");
  sweep->add_flag("--homology-hopf-only", opt.homology_hopf_only, "keep only mu = 1 rows");

  auto* selftest = app.add_subcommand("selftest", "run the property suites at reduced size");
  selftest->add_option("--samples", opt.samples, "cases per suite")->capture_default_str();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadInput;
  }

  try {
    if (classify->parsed()) return cmd_classify(opt, in, out);
    if (compose->parsed()) return cmd_compose(opt, out, err);
    if (reduce->parsed()) return cmd_reduce(opt, in, out, err);
    if (verify->parsed()) return cmd_verify(opt, in, out);
    if (sweep->parsed()) return cmd_sweep(opt, out);
    if (selftest->parsed()) return cmd_selftest(opt, out);
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace hopf::cli

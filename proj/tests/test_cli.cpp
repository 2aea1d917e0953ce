#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hopf/cli.hpp"
#include "hopf/documents.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = hopf::cli::run(std::move(args), in, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream f(std::string(HOPF_GOLDEN_DIR) + "/" + name);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("classify") {
  const Run zeta = run({"classify", "--matrix", "1,0,1,0,1,0,0,0,-1"});
  CHECK(zeta.code == 0);
  CHECK(zeta.out == golden("classify_zeta.json"));
  CHECK(zeta.err.empty());

  const Run torsion = run({"classify", "--matrix", "1,0,2,0,1,4,0,0,1"});
  CHECK(torsion.code == 0);
  CHECK(torsion.out == golden("classify_g2_h4.json"));

  const Run from_stdin = run({"classify"}, R"({"matrix": [[1,0,1],[0,1,0],[0,0,-1]]})");
  CHECK(from_stdin.out == zeta.out);

  const Run bad = run({"classify", "--matrix", "2,0,0,0,1,0,0,0,1"});
  CHECK(bad.code == hopf::cli::kBadInput);
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());

  CHECK(run({"classify"}, "not json").code == hopf::cli::kBadInput);
  CHECK(run({"classify", "--file", "/nonexistent/doc.json"}).code == hopf::cli::kBadInput);
}

TEST_CASE("compose") {
  const Run trivial = run({"compose", "--plus", "0,0,1", "--minus", "0,0,1"});
  REQUIRE(trivial.code == 0);
  const auto tj = hopf::json::parse(trivial.out);
  CHECK(tj["composed"] == hopf::json::parse("[[1,0,1],[0,1,0],[0,0,-1]]"));
  CHECK(tj["agreement"] == true);
  CHECK(tj["direct_group"] == hopf::json::parse(R"({"invariant_factors":[],"rank":1})"));
  CHECK(tj["zeta_variant"] == "raw");

  const Run three = run({"compose", "--plus", "1,0,1", "--minus", "1,0,1"});
  REQUIRE(three.code == 0);
  const auto j3 = hopf::json::parse(three.out);
  CHECK(j3["direct_group"]["invariant_factors"] == hopf::json::parse("[3]"));
  CHECK(j3["agreement"] == true);

  CHECK(run({"compose", "--plus", "2,0,2", "--minus", "1,0,1"}).code == hopf::cli::kBadInput);
  CHECK(run({"compose", "--plus", "1,0", "--minus", "1,0,1"}).code == hopf::cli::kBadInput);

  // Explicit completion with third column (1,0,1).
  const Run explicit_completion = run({"compose", "--plus", "1,0,1", "--minus", "1,0,1",
                                       "--plus-completion", "1,1,1,0,1,0,0,1,1"});
  CHECK(explicit_completion.code == 0);
  CHECK(hopf::json::parse(explicit_completion.out)["agreement"] == true);
  CHECK(run({"compose", "--plus", "1,0,1", "--minus", "1,0,1", "--plus-completion",
             "1,0,0,0,1,0,0,0,1"})
            .code == hopf::cli::kBadInput);
}

TEST_CASE("reduce and verify") {
  const Run r = run({"reduce", "--matrix", "1,0,2,0,1,1,0,0,1"});
  REQUIRE(r.code == 0);
  const auto cert = hopf::json::parse(r.out);
  CHECK(cert["output"] == hopf::json::parse("[[0,1,1],[-1,2,0],[0,0,1]]"));
  CHECK(run({"verify"}, r.out).out == "VALID\n");
  CHECK(run({"verify"}, r.out).code == 0);

  const Run standard = run({"reduce", "--standard", "--matrix", "1,0,1,0,1,0,0,0,1"});
  REQUIRE(standard.code == 0);
  const auto sj = hopf::json::parse(standard.out);
  CHECK(sj["left_factors"].empty());
  CHECK(sj["right_factors"].empty());

  const Run zeta = run({"reduce", "--standard", "--matrix", "1,0,1,0,1,0,0,0,-1"});
  REQUIRE(zeta.code == 0);
  const auto zj = hopf::json::parse(zeta.out);
  CHECK(zj["orientation_normalized"] == true);
  CHECK(zj["output"] == hopf::json::parse("[[1,0,1],[0,1,0],[0,0,1]]"));
  CHECK(run({"verify"}, zeta.out).code == 0);

  const Run not_hopf = run({"reduce", "--matrix", "1,0,2,0,1,4,0,0,1"});
  CHECK(not_hopf.code == hopf::cli::kNotHopf);
  CHECK(not_hopf.err.find("gcd(2,4) = 2") != std::string::npos);

  auto tampered = cert;
  tampered["output"][0][0] = 5;
  const Run bad = run({"verify"}, tampered.dump());
  CHECK(bad.code == hopf::cli::kInvalid);
  CHECK(bad.out.rfind("INVALID", 0) == 0);

  auto bad_factor = cert;
  bad_factor["left_factors"][0][2][2] = 2;
  const Run bf = run({"verify"}, bad_factor.dump());
  CHECK(bf.code == hopf::cli::kInvalid);
  CHECK(bf.out == "INVALID: left_factors[0] is not extendable\n");

  CHECK(run({"verify"}, r.out.substr(0, r.out.size() / 2)).code == hopf::cli::kBadInput);
}

TEST_CASE("sweep") {
  const std::vector<std::string> args{"sweep",           "--direction-plus", "1,0",
                                      "--direction-minus", "1,0",           "--p-range",
                                      "0:2",             "--q-range",        "0:2"};
  const Run first = run(args);
  REQUIRE(first.code == 0);
  CHECK(first.out == golden("sweep_10_10_p0-2_q0-2.csv"));
  CHECK(run(args).out == first.out);

  auto serial_args = args;
  serial_args.push_back("--serial");
  CHECK(run(serial_args).out == first.out);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "4"});
  CHECK(run(threaded).out == first.out);

  const Run empty = run({"sweep", "--random", "0"});
  CHECK(empty.code == 0);
  CHECK(empty.out == std::string(hopf::kSweepCsvHeader) + "\n");

  const Run rnd1 = run({"sweep", "--random", "50", "--seed", "9", "--format", "json"});
  const Run rnd2 = run({"sweep", "--random", "50", "--seed", "9", "--format", "json", "--serial"});
  CHECK(rnd1.code == 0);
  CHECK(rnd1.out == rnd2.out);
  CHECK(hopf::json::parse(rnd1.out)["summary"]["total"] == 50);

  const Run negative = run({"sweep", "--p-range=-2:2", "--q-range=-1:1"});
  CHECK(negative.code == 0);

  CHECK(run({"sweep", "--p-range", "2:0", "--q-range", "0:2"}).code == hopf::cli::kBadInput);
  CHECK(run({"sweep", "--p-range", "0-2", "--q-range", "0:2"}).code == hopf::cli::kBadInput);
  CHECK(run({"sweep", "--p-range", "0:2"}).code == hopf::cli::kBadInput);
  CHECK(run({"sweep", "--random", "3", "--format", "xml"}).code == hopf::cli::kBadInput);
  CHECK(run({"sweep", "--random", "3", "--p-range", "0:1"}).code == hopf::cli::kBadInput);
}

TEST_CASE("selftest") {
  const Run r = run({"selftest", "--samples", "30"});
  CHECK(r.code == 0);
  for (const char* suite : {"snf-minor-gcd", "cross-invariant-agreement", "reduction-certificates"})
    CHECK(r.out.find(std::string("PASS ") + suite) != std::string::npos);
  CHECK(r.out.size() >= 12);
  CHECK(r.out.substr(r.out.size() - 12) == "SELFTEST OK\n");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == hopf::cli::kBadInput);
  CHECK(run({"frobnicate"}).code == hopf::cli::kBadInput);
  CHECK(run({"classify", "--matrix", "1,0,0,0,1,0,0,0,1", "--file", "x"}).code ==
        hopf::cli::kBadInput);
  CHECK(run({"--help"}).code == 0);
}

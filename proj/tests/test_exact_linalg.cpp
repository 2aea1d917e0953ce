#include <doctest.h>

#include "hopf/exact_linalg.hpp"
#include "hopf/seed.hpp"
#include "oracles.hpp"

using namespace hopf;

namespace {

void check_snf(const IntMatrix& a) {
  const SnfResult snf = smith_normal_form(a);
  REQUIRE(oracle::naive_multiply(oracle::naive_multiply(snf.u.matrix(), a), snf.v.matrix()) ==
          snf.d);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) REQUIRE(snf.d(r, c) == 0);
  const auto diag = snf.diagonal();
  Integer running = 1;
  for (std::size_t k = 0; k < diag.size(); ++k) {
    REQUIRE(diag[k] >= 0);
    if (k + 1 < diag.size()) {
      if (diag[k] == 0) {
        REQUIRE(diag[k + 1] == 0);
      } else {
        REQUIRE(diag[k + 1] % diag[k] == 0);
      }
    }
    running *= diag[k];
    REQUIRE(running == oracle::minor_gcd(a, k + 1));
  }
}

}  // namespace

TEST_CASE("multiply") {
  const IntMatrix m{{1, -2, 3}, {4, 0, -6}, {7, 8, 9}};
  CHECK(IntMatrix::identity(3) * m == m);
  CHECK(IntMatrix{{1, 1}, {0, 1}} * IntMatrix{{1, 0}, {1, 1}} == IntMatrix{{2, 1}, {1, 1}});
  CHECK_THROWS_AS(multiply(IntMatrix(2, 3), IntMatrix(2, 3)), ShapeError);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const IntMatrix a = oracle::random_matrix(rng, 3, 3, -9, 9);
    const IntMatrix b = oracle::random_matrix(rng, 3, 3, -9, 9);
    REQUIRE(multiply(a, b) == oracle::naive_multiply(a, b));
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix::identity(3)) == 1);
  CHECK(determinant(IntMatrix::diagonal({1, 1, -1})) == -1);
  CHECK(determinant(IntMatrix{{1, 0, 1}, {0, 1, 0}, {0, 0, -1}}) == -1);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), ShapeError);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng() % 5;
    const IntMatrix a = oracle::random_matrix(rng, n, n, -4, 4);
    REQUIRE(determinant(a) == oracle::cofactor_det(a));
  }
}

TEST_CASE("unimodular construction and inverse") {
  CHECK_THROWS_AS(UnimodularMatrix(IntMatrix::diagonal({2, 1})), NotUnimodularError);
  CHECK_THROWS_AS(UnimodularMatrix(IntMatrix(2, 3)), NotUnimodularError);
  CHECK(inverse_unimodular(UnimodularMatrix::identity(3)) == UnimodularMatrix::identity(3));
  CHECK(inverse_unimodular(UnimodularMatrix(IntMatrix{{1, 1}, {0, 1}})).matrix() ==
        IntMatrix{{1, -1}, {0, 1}});

  for (std::uint64_t s = 0; s < 300; ++s) {
    const UnimodularMatrix m = random_sl3(s, 20);
    const UnimodularMatrix inv = inverse_unimodular(m);
    REQUIRE(oracle::naive_multiply(m.matrix(), inv.matrix()) == IntMatrix::identity(3));
    REQUIRE(oracle::naive_multiply(inv.matrix(), m.matrix()) == IntMatrix::identity(3));
  }
  // det -1
  const UnimodularMatrix flip(IntMatrix{{1, 0, 1}, {0, 1, 0}, {0, 0, -1}});
  CHECK(flip.det() == -1);
  CHECK(flip.matrix() * inverse_unimodular(flip).matrix() == IntMatrix::identity(3));
}

TEST_CASE("extended_gcd") {
  auto check = [](long a, long b, long g, long x, long y) {
    const Bezout r = extended_gcd(a, b);
    CHECK(r.g == g);
    CHECK(r.x == x);
    CHECK(r.y == y);
  };
  check(2, 1, 1, 0, 1);
  check(0, 0, 0, 0, 0);
  check(1, 0, 1, 1, 0);
  check(0, 1, 1, 0, 1);
  check(0, -5, 5, 0, -1);

  const Bezout r = extended_gcd(6, 4);
  CHECK(r.g == 2);
  CHECK(r.x * 6 + r.y * 4 == 2);

  for (long a = -30; a <= 30; ++a)
    for (long b = -30; b <= 30; ++b) {
      const Bezout e = extended_gcd(a, b);
      REQUIRE(e.g == oracle::plain_gcd(a, b));
      REQUIRE(e.x * a + e.y * b == e.g);
      // Euclidean coefficients stay small: |x| <= max(1, |b|/g).
      if (e.g != 0) REQUIRE(abs(e.x) <= std::max<long>(1, std::abs(b)));
      REQUIRE(extended_gcd(a, b).x == e.x);
    }
}

TEST_CASE("smith_normal_form examples") {
  const SnfResult zero = smith_normal_form(IntMatrix(2, 3));
  CHECK(zero.d == IntMatrix(2, 3));
  CHECK(zero.u.matrix() == IntMatrix::identity(2));
  CHECK(zero.v.matrix() == IntMatrix::identity(3));

  CHECK(smith_normal_form(IntMatrix{{2, 4}, {6, 8}}).d == IntMatrix::diagonal({2, 4}));
  CHECK(smith_normal_form(IntMatrix{{1, 0, -1}, {0, 0, 1}}).d == IntMatrix{{1, 0, 0}, {0, 1, 0}});
  CHECK(smith_normal_form(IntMatrix{{2, 0, -1}, {1, 0, 1}}).d == IntMatrix{{1, 0, 0}, {0, 3, 0}});
  CHECK(smith_normal_form(IntMatrix{{-5}}).d == IntMatrix{{5}});
}

TEST_CASE("smith_normal_form exhaustive small matrices, entries in [-3,3]") {
  for (auto [r, c] : {std::pair{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 2}, {2, 3}, {3, 2}}) {
    oracle::for_each_matrix(r, c, -3, 3, check_snf);
  }
}

TEST_CASE("smith_normal_form random larger matrices") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t r = 2 + rng() % 3;
    const std::size_t c = 2 + rng() % 3;
    check_snf(oracle::random_matrix(rng, r, c, -20, 20));
  }
  // A 6x6 case at the top of the supported size.
  check_snf(oracle::random_matrix(rng, 6, 6, -5, 5));
}

TEST_CASE("smith_normal_form is deterministic") {
  const IntMatrix a{{3, -7, 2}, {9, 4, -1}, {0, 6, 5}};
  const SnfResult s1 = smith_normal_form(a);
  const SnfResult s2 = smith_normal_form(a);
  CHECK(s1.u == s2.u);
  CHECK(s1.v == s2.v);
  CHECK(s1.d == s2.d);
}

TEST_CASE("gcd_of_k_minors") {
  CHECK(gcd_of_k_minors(IntMatrix{{2, 4}, {6, 8}}, 1) == 2);
  CHECK(gcd_of_k_minors(IntMatrix{{2, 4}, {6, 8}}, 2) == 8);
  CHECK(gcd_of_k_minors(IntMatrix{{1, 0, -1}, {0, 0, 1}}, 2) == 1);
  CHECK(gcd_of_k_minors(IntMatrix(2, 2), 2) == 0);
  CHECK_THROWS_AS(gcd_of_k_minors(IntMatrix(2, 3), 3), ShapeError);
  CHECK_THROWS_AS(gcd_of_k_minors(IntMatrix(2, 3), 0), ShapeError);

  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    const IntMatrix a = oracle::random_matrix(rng, 3, 4, -6, 6);
    for (std::size_t k = 1; k <= 3; ++k) REQUIRE(gcd_of_k_minors(a, k) == oracle::minor_gcd(a, k));
  }
}

TEST_CASE("complete_primitive_to_sl3") {
  auto check = [](long a, long b, long p) {
    const UnimodularMatrix m = complete_primitive_to_sl3({a, b, p});
    REQUIRE(oracle::cofactor_det(m.matrix()) == 1);
    REQUIRE(m(0, 2) == a);
    REQUIRE(m(1, 2) == b);
    REQUIRE(m(2, 2) == p);
  };
  CHECK(complete_primitive_to_sl3({0, 0, 1}).matrix() == IntMatrix::identity(3));
  check(1, 0, 0);
  check(2, 3, 5);
  check(0, 0, -1);
  check(0, 4, 3);
  check(-6, 10, 15);
  CHECK_THROWS_AS(complete_primitive_to_sl3({2, 0, 2}), NotPrimitiveError);
  CHECK_THROWS_AS(complete_primitive_to_sl3({0, 0, 0}), NotPrimitiveError);

  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b)
      for (long p = -6; p <= 6; ++p)
        if (oracle::plain_gcd(oracle::plain_gcd(a, b), p) == 1) check(a, b, p);
}

TEST_CASE("sl2_carry_to_e1") {
  CHECK(sl2_carry_to_e1(1, 0).matrix() == IntMatrix::identity(2));
  CHECK(sl2_carry_to_e1(0, 1).matrix() == IntMatrix{{0, 1}, {-1, 0}});
  CHECK(sl2_carry_to_e1(2, 1).matrix() == IntMatrix{{0, 1}, {-1, 2}});
  CHECK_THROWS_AS(sl2_carry_to_e1(2, 4), NotPrimitiveError);
  CHECK_THROWS_AS(sl2_carry_to_e1(0, 0), NotPrimitiveError);

  for (long g = -25; g <= 25; ++g)
    for (long h = -25; h <= 25; ++h) {
      if (oracle::plain_gcd(g, h) != 1) continue;
      const UnimodularMatrix u = sl2_carry_to_e1(g, h);
      REQUIRE(u.det() == 1);
      const IntMatrix image = u.matrix() * IntMatrix(2, 1, {g, h});
      REQUIRE(image == IntMatrix(2, 1, {1, 0}));
    }
}

TEST_CASE("random_sl3") {
  CHECK(random_sl3(5, 0).matrix() == IntMatrix::identity(3));
  CHECK(random_sl3(42, 30) == random_sl3(42, 30));
  CHECK_FALSE(random_sl3(42, 30) == random_sl3(43, 30));
  for (std::uint64_t s = 0; s < 1000; ++s) {
    REQUIRE(oracle::cofactor_det(random_sl3(mix_seed(3, s), 1 + s % 25).matrix()) == 1);
  }
}

#include "hopf/exact_linalg.hpp"

#include <random>
#include <utility>

namespace hopf {

namespace {

int checked_unit_det(const IntMatrix& m) {
  if (!m.is_square()) throw NotUnimodularError("unimodular matrix must be square");
  const Integer d = determinant(m);
  if (d == 1) return 1;
  if (d == -1) return -1;
  throw NotUnimodularError("determinant " + d.get_str() + " is not +1 or -1");
}

Integer abs_of(const Integer& v) { return v < 0 ? Integer(-v) : v; }

// Pivot with the smallest nonzero |entry| in the block [t.., t..]; false if the block is zero.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Integer best;
  for (std::size_t r = t; r < a.rows(); ++r)
    for (std::size_t c = t; c < a.cols(); ++c) {
      if (a(r, c) == 0) continue;
      Integer v = abs_of(a(r, c));
      if (!found || v < best) {
        found = true;
        best = std::move(v);
        pr = r;
        pc = c;
      }
    }
  return found;
}

void next_combination_indices(std::vector<std::vector<std::size_t>>& out, std::size_t n,
                              std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

UnimodularMatrix::UnimodularMatrix(IntMatrix m) : m_(std::move(m)), det_(checked_unit_det(m_)) {}

UnimodularMatrix UnimodularMatrix::identity(std::size_t n) {
  return UnimodularMatrix(IntMatrix::identity(n));
}

UnimodularMatrix operator*(const UnimodularMatrix& a, const UnimodularMatrix& b) {
  return UnimodularMatrix(a.matrix() * b.matrix());
}

std::vector<Integer> SnfResult::diagonal() const {
  std::vector<Integer> out;
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i) out.push_back(d(i, i));
  return out;
}

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  IntMatrix m = a;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
    }
    prev = m(k, k);
  }
  Integer det = m(n - 1, n - 1);
  return sign < 0 ? Integer(-det) : det;
}

UnimodularMatrix inverse_unimodular(const UnimodularMatrix& a) {
  const std::size_t n = a.size();
  if (n == 1) return UnimodularMatrix(IntMatrix(1, 1, {Integer(a.det())}));
  IntMatrix inv(n, n);
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rows.clear();
      cols.clear();
      for (std::size_t r = 0; r < n; ++r)
        if (r != j) rows.push_back(r);
      for (std::size_t c = 0; c < n; ++c)
        if (c != i) cols.push_back(c);
      // adj(i, j) = (-1)^(i+j) * minor(j, i); inverse = adj / det
      Integer cof = determinant(a.matrix().submatrix(rows, cols));
      if ((i + j) % 2 == 1) cof = -cof;
      inv(i, j) = a.det() == 1 ? cof : Integer(-cof);
    }
  return UnimodularMatrix(std::move(inv));
}

Bezout extended_gcd(const Integer& a, const Integer& b) {
  if (a == 0 && b == 0) return {0, 0, 0};
  // Iterative form of egcd(r0, r1) = egcd(r1, r0 mod r1).
  Integer r0 = abs_of(a), r1 = abs_of(b);
  Integer x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer x2 = x0 - q * x1;
    Integer y2 = y0 - q * y1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    x0 = std::move(x1);
    x1 = std::move(x2);
    y0 = std::move(y1);
    y1 = std::move(y2);
  }
  if (a < 0) x0 = -x0;
  if (b < 0) y0 = -y0;
  return {r0, x0, y0};
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

SnfResult smith_normal_form(const IntMatrix& input) {
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  IntMatrix d = input;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      std::size_t pr = t, pc = t;
      if (!find_pivot(d, t, pr, pc)) break;
      d.swap_rows(t, pr);
      u.swap_rows(t, pr);
      d.swap_cols(t, pc);
      v.swap_cols(t, pc);

      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Row and column t are clear; enforce divisibility on the trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return SnfResult{UnimodularMatrix(std::move(u)), std::move(d), UnimodularMatrix(std::move(v))};
}

Integer gcd_of_k_minors(const IntMatrix& a, std::size_t k) {
  if (k == 0 || k > std::min(a.rows(), a.cols())) {
    throw ShapeError("minor size " + std::to_string(k) + " out of range for " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  std::vector<std::vector<std::size_t>> row_sets, col_sets;
  next_combination_indices(row_sets, a.rows(), k);
  next_combination_indices(col_sets, a.cols(), k);
  Integer g = 0;
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets) {
      g = gcd(g, determinant(a.submatrix(rs, cs)));
      if (g == 1) return g;
    }
  return g;
}

UnimodularMatrix complete_primitive_to_sl3(const std::array<Integer, 3>& v) {
  const auto& [a, b, p] = v;
  const Bezout ab = extended_gcd(a, b);
  const Bezout gp = extended_gcd(ab.g, p);
  if (gp.g != 1) {
    throw NotPrimitiveError("(" + a.get_str() + "," + b.get_str() + "," + p.get_str() +
                            ") has gcd " + gp.g.get_str() + ", expected 1");
  }
  if (ab.g == 0) {
    // v = (0, 0, +-1)
    return UnimodularMatrix(IntMatrix(3, 3, {1, 0, 0, 0, p, 0, 0, 0, p}));
  }
  // Basis f1 = (a', b', 0), f2 = (-y, x, 0), e3 of Z^3 with det 1, where
  // (a, b) = g1 * (a', b') and x a' + y b' = 1. Then v = g1 f1 + p e3 and
  // (t f1 - s e3, f2, v) has det s g1 + t p = 1.
  const Integer a1 = a / ab.g;
  const Integer b1 = b / ab.g;
  const Integer& x = ab.x;
  const Integer& y = ab.y;
  const Integer& s = gp.x;
  const Integer& t = gp.y;
  IntMatrix m(3, 3, {t * a1, -y, a,  //
                     t * b1, x, b,   //
                     -s, 0, p});
  return UnimodularMatrix(std::move(m));
}

UnimodularMatrix sl2_carry_to_e1(const Integer& g, const Integer& h) {
  const Bezout bz = extended_gcd(g, h);
  if (bz.g != 1) {
    throw NotPrimitiveError("gcd(" + g.get_str() + "," + h.get_str() + ") = " + bz.g.get_str() +
                            ", expected 1");
  }
  return UnimodularMatrix(IntMatrix(2, 2, {bz.x, bz.y, -h, g}));
}

UnimodularMatrix random_sl3(std::uint64_t seed, std::size_t word_length) {
  static constexpr std::array<std::pair<std::size_t, std::size_t>, 6> kPositions{
      {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}}};
  std::mt19937_64 rng(seed);
  IntMatrix m = IntMatrix::identity(3);
  for (std::size_t i = 0; i < word_length; ++i) {
    const std::uint64_t draw = rng() % 12;
    const auto [row, col] = kPositions[draw / 2];
    m.add_row_multiple(row, col, draw % 2 == 0 ? 1 : -1);
  }
  return UnimodularMatrix(std::move(m));
}

}  // namespace hopf

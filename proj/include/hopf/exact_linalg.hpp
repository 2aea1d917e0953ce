#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "hopf/int_matrix.hpp"

namespace hopf {

/// Square integer matrix with determinant +1 or -1.
class UnimodularMatrix {
 public:
  /// Throws NotUnimodularError unless `m` is square with |det| = 1.
  explicit UnimodularMatrix(IntMatrix m);

  static UnimodularMatrix identity(std::size_t n);

  [[nodiscard]] const IntMatrix& matrix() const { return m_; }
  [[nodiscard]] int det() const { return det_; }
  [[nodiscard]] std::size_t size() const { return m_.rows(); }
  [[nodiscard]] const Integer& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  friend bool operator==(const UnimodularMatrix& a, const UnimodularMatrix& b) {
    return a.m_ == b.m_;
  }

 private:
  IntMatrix m_;
  int det_;
};

UnimodularMatrix operator*(const UnimodularMatrix& a, const UnimodularMatrix& b);

struct Bezout {
  Integer g;  // gcd, always >= 0
  Integer x;
  Integer y;
};

struct SnfResult {
  UnimodularMatrix u;
  IntMatrix d;
  UnimodularMatrix v;

  /// Diagonal entries d(0,0), d(1,1), ... up to min(rows, cols).
  [[nodiscard]] std::vector<Integer> diagonal() const;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);

UnimodularMatrix inverse_unimodular(const UnimodularMatrix& a);

/// Bezout coefficients from the classical Euclidean recursion.
///
/// x*a + y*b = g with g = gcd(a, b) >= 0. gcd(0, 0) = 0 and both
/// coefficients are zero in that case. Signs of x and y follow the signs of
/// the inputs, the magnitudes are those of the recursion on |a|, |b|.
Bezout extended_gcd(const Integer& a, const Integer& b);

Integer gcd(const Integer& a, const Integer& b);

/// Smith normal form u * a * v = d with a non-negative divisibility chain.
///
/// The pivot is the entry of smallest nonzero absolute value in the remaining
/// block, first in row-major order on ties.
SnfResult smith_normal_form(const IntMatrix& a);

/// gcd over all k x k minors; 0 when every minor vanishes.
Integer gcd_of_k_minors(const IntMatrix& a, std::size_t k);

/// Determinant +1 matrix whose third column is exactly `v`.
UnimodularMatrix complete_primitive_to_sl3(const std::array<Integer, 3>& v);

/// The 2x2 matrix [[x, y], [-h, g]] with x*g + y*h = 1; it maps (g, h) to (1, 0).
UnimodularMatrix sl2_carry_to_e1(const Integer& g, const Integer& h);

/// Seeded product of `word_length` elementary row-addition matrices E_ij(+-1).
UnimodularMatrix random_sl3(std::uint64_t seed, std::size_t word_length);

}  // namespace hopf

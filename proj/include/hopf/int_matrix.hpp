#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hopf {

using Integer = mpz_class;

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotUnimodularError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotPrimitiveError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Dimensions are fixed at construction and always positive.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::initializer_list<long> values);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  [[nodiscard]] const Integer& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  Integer& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }

  [[nodiscard]] const std::vector<Integer>& entries() const { return entries_; }

  [[nodiscard]] IntMatrix transpose() const;
  [[nodiscard]] IntMatrix submatrix(const std::vector<std::size_t>& row_idx,
                                    const std::vector<std::size_t>& col_idx) const;
  [[nodiscard]] std::vector<Integer> column(std::size_t c) const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  // row i += factor * row j
  void add_row_multiple(std::size_t i, std::size_t j, const Integer& factor);
  void add_col_multiple(std::size_t i, std::size_t j, const Integer& factor);
  void negate_row(std::size_t i);

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> entries_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

}  // namespace hopf

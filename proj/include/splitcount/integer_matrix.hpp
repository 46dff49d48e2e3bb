#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace splitcount {

using Integer = mpz_class;
using Rational = mpq_class;
using IntegerVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
///
/// The counted objects are square, but the normal-form routines also work
/// on stacked lattice bases, so rectangular shapes are allowed. Functions
/// that need a square input check it and throw DimensionMismatch.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit IntegerMatrix(std::size_t n) : IntegerMatrix(n, n) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<IntegerVector> &rows,
                                 std::size_t cols);
  static IntegerMatrix from_int64(std::size_t n,
                                  std::span<const std::int64_t> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t dim() const noexcept { return rows_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer &operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Integer &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntegerVector row(std::size_t i) const;
  IntegerVector col(std::size_t j) const;
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row(dst) += factor * row(src)
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer &factor);
  /// col(dst) += factor * col(src)
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer &factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  IntegerMatrix transpose() const;
  IntegerMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                      std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const IntegerMatrix &src);

  bool is_zero() const;
  bool is_upper_triangular() const;
  bool is_strictly_upper_triangular() const;

  std::span<const Integer> entries() const noexcept { return data_; }

  friend bool operator==(const IntegerMatrix &, const IntegerMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntegerMatrix mat_mul(const IntegerMatrix &a, const IntegerMatrix &b);
IntegerMatrix mat_add(const IntegerMatrix &a, const IntegerMatrix &b);
IntegerMatrix mat_sub(const IntegerMatrix &a, const IntegerMatrix &b);
IntegerMatrix scalar_mul(const Integer &s, const IntegerMatrix &a);
IntegerMatrix mat_pow(const IntegerMatrix &a, unsigned k);
/// a + s*I
IntegerMatrix shift_diagonal(const IntegerMatrix &a, const Integer &s);
/// Block-diagonal direct sum.
IntegerMatrix direct_sum(const IntegerMatrix &top, const IntegerMatrix &bottom);

/// Max absolute entry (0 for empty).
Integer sup_norm(const IntegerMatrix &a);
/// Sum of squared entries; the Frobenius norm squared, kept exact.
Integer frobenius_sq(const IntegerMatrix &a);

std::string to_string(const IntegerMatrix &a);

} // namespace splitcount

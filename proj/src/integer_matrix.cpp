#include "splitcount/integer_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "splitcount/errors.hpp"

namespace splitcount {

IntegerMatrix::IntegerMatrix(
    std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (long v : r)
      data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntegerVector> &rows,
                                       std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw Error(ErrorCode::DimensionMismatch, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_int64(std::size_t n,
                                        std::span<const std::int64_t> entries) {
  if (entries.size() != n * n)
    throw Error(ErrorCode::DimensionMismatch, "entry count is not n*n");
  IntegerMatrix m(n);
  for (std::size_t k = 0; k < entries.size(); ++k)
    m.data_[k] = Integer(static_cast<long>(entries[k]));
  return m;
}

IntegerVector IntegerMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

IntegerVector IntegerMatrix::col(std::size_t j) const {
  IntegerVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    v[i] = (*this)(i, j);
  return v;
}

void IntegerMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j)
    return;
  for (std::size_t k = 0; k < cols_; ++k)
    std::swap((*this)(i, k), (*this)(j, k));
}

void IntegerMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j)
    return;
  for (std::size_t k = 0; k < rows_; ++k)
    std::swap((*this)(k, i), (*this)(k, j));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                     const Integer &factor) {
  if (factor == 0)
    return;
  for (std::size_t k = 0; k < cols_; ++k)
    (*this)(dst, k) += factor * (*this)(src, k);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                     const Integer &factor) {
  if (factor == 0)
    return;
  for (std::size_t k = 0; k < rows_; ++k)
    (*this)(k, dst) += factor * (*this)(k, src);
}

void IntegerMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k)
    (*this)(i, k) = -(*this)(i, k);
}

void IntegerMatrix::negate_col(std::size_t j) {
  for (std::size_t k = 0; k < rows_; ++k)
    (*this)(k, j) = -(*this)(k, j);
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

IntegerMatrix IntegerMatrix::block(std::size_t r0, std::size_t c0,
                                   std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_)
    throw Error(ErrorCode::DimensionMismatch, "block out of range");
  IntegerMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void IntegerMatrix::set_block(std::size_t r0, std::size_t c0,
                              const IntegerMatrix &src) {
  if (r0 + src.rows() > rows_ || c0 + src.cols() > cols_)
    throw Error(ErrorCode::DimensionMismatch, "block out of range");
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j)
      (*this)(r0 + i, c0 + j) = src(i, j);
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Integer &x) { return x == 0; });
}

bool IntegerMatrix::is_upper_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < std::min(i, cols_); ++j)
      if ((*this)(i, j) != 0)
        return false;
  return true;
}

bool IntegerMatrix::is_strictly_upper_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j <= i && j < cols_; ++j)
      if ((*this)(i, j) != 0)
        return false;
  return true;
}

IntegerMatrix mat_mul(const IntegerMatrix &a, const IntegerMatrix &b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, "mat_mul: inner dimensions differ");
  IntegerMatrix c(a.rows(), b.cols());
  Integer acc;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k)
        acc += a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  return c;
}

IntegerMatrix mat_add(const IntegerMatrix &a, const IntegerMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "mat_add: shapes differ");
  IntegerMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c(i, j) = a(i, j) + b(i, j);
  return c;
}

IntegerMatrix mat_sub(const IntegerMatrix &a, const IntegerMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "mat_sub: shapes differ");
  IntegerMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c(i, j) = a(i, j) - b(i, j);
  return c;
}

IntegerMatrix scalar_mul(const Integer &s, const IntegerMatrix &a) {
  IntegerMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c(i, j) = s * a(i, j);
  return c;
}

IntegerMatrix mat_pow(const IntegerMatrix &a, unsigned k) {
  if (!a.is_square())
    throw Error(ErrorCode::DimensionMismatch, "mat_pow: not square");
  IntegerMatrix result = IntegerMatrix::identity(a.rows());
  IntegerMatrix base = a;
  while (k > 0) {
    if (k & 1U)
      result = mat_mul(result, base);
    k >>= 1U;
    if (k > 0)
      base = mat_mul(base, base);
  }
  return result;
}

IntegerMatrix shift_diagonal(const IntegerMatrix &a, const Integer &s) {
  if (!a.is_square())
    throw Error(ErrorCode::DimensionMismatch, "shift_diagonal: not square");
  IntegerMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    c(i, i) += s;
  return c;
}

IntegerMatrix direct_sum(const IntegerMatrix &top, const IntegerMatrix &bottom) {
  IntegerMatrix c(top.rows() + bottom.rows(), top.cols() + bottom.cols());
  c.set_block(0, 0, top);
  c.set_block(top.rows(), top.cols(), bottom);
  return c;
}

Integer sup_norm(const IntegerMatrix &a) {
  Integer best = 0;
  for (const auto &x : a.entries())
    if (abs(x) > best)
      best = abs(x);
  return best;
}

Integer frobenius_sq(const IntegerMatrix &a) {
  Integer s = 0;
  for (const auto &x : a.entries())
    s += x * x;
  return s;
}

std::string to_string(const IntegerMatrix &a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < a.cols(); ++j)
      os << (j ? "," : "") << a(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

} // namespace splitcount

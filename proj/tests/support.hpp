#pragma once

// Test-only oracles. Nothing here calls the library routine it checks.

#include <cstdint>
#include <random>
#include <vector>

#include "splitcount/integer_matrix.hpp"

namespace testsupport {

using splitcount::Integer;
using splitcount::IntegerMatrix;

/// Cofactor expansion along the first row.
inline Integer laplace_det(const IntegerMatrix &a) {
  const std::size_t n = a.rows();
  if (n == 0)
    return 1;
  if (n == 1)
    return a(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0)
      continue;
    IntegerMatrix minor(n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j)
          minor(r - 1, cc++) = a(r, c);
    Integer term = a(0, j) * laplace_det(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

/// Dense polynomial in x with integer coefficients, low to high.
using Poly = std::vector<Integer>;

inline Poly poly_times(const Poly &p, const Poly &q) {
  Poly r(p.size() + q.size() - 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      r[i + j] += p[i] * q[j];
  return r;
}

/// det(xI - A) by Laplace expansion over polynomial entries.
inline Poly laplace_char_poly(const IntegerMatrix &a) {
  const std::size_t n = a.rows();
  std::vector<Poly> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i * n + j] = i == j ? Poly{-a(i, j), 1} : Poly{-a(i, j)};
  auto rec = [&](auto &self, std::vector<std::size_t> rows,
                 std::vector<std::size_t> cols) -> Poly {
    if (rows.size() == 1)
      return m[rows[0] * n + cols[0]];
    Poly total{0};
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
      std::vector<std::size_t> sub_cols = cols;
      sub_cols.erase(sub_cols.begin() + static_cast<long>(k));
      Poly term = poly_times(m[rows[0] * n + cols[k]], self(self, sub_rows, sub_cols));
      if (total.size() < term.size())
        total.resize(term.size(), 0);
      for (std::size_t i = 0; i < term.size(); ++i)
        total[i] += (k % 2 == 0) ? term[i] : Integer(-term[i]);
    }
    return total;
  };
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i)
    idx[i] = i;
  Poly p = rec(rec, idx, idx);
  while (p.size() > 1 && p.back() == 0)
    p.pop_back();
  return p;
}

inline IntegerMatrix naive_mul(const IntegerMatrix &a, const IntegerMatrix &b) {
  IntegerMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k)
        r(i, j) += a(i, k) * b(k, j);
  return r;
}

/// A random determinant-one matrix built from elementary moves, paired with
/// its inverse built from the inverse moves in reverse.
struct UnimodularPair {
  IntegerMatrix g;
  IntegerMatrix g_inv;
};

inline UnimodularPair random_unimodular(std::size_t n, std::mt19937_64 &rng,
                                        int moves, int max_step = 1) {
  UnimodularPair p{IntegerMatrix::identity(n), IntegerMatrix::identity(n)};
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> step(-max_step, max_step);
  for (int m = 0; m < moves; ++m) {
    std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    if (i == j)
      continue;
    int t = step(rng);
    if (t == 0)
      continue;
    // g <- E g with E = I + t e_ij ; g_inv <- g_inv E^{-1}.
    p.g.add_row_multiple(i, j, t);
    p.g_inv.add_col_multiple(j, i, -t);
  }
  return p;
}

/// Random determinant-one matrix with every entry bounded by `bound`.
inline UnimodularPair random_bounded_unimodular(std::size_t n,
                                                std::mt19937_64 &rng,
                                                long bound, int moves) {
  for (;;) {
    UnimodularPair p = random_unimodular(n, rng, moves);
    bool ok = true;
    for (const Integer &x : p.g.entries())
      if (abs(x) > bound)
        ok = false;
    if (ok)
      return p;
  }
}

/// Independent nested-loop count of 3x3 matrices with entries in [-H, H],
/// det 1 and characteristic polynomial (x-1)^a (x+1)^b, using the explicit
/// 3x3 coefficient formulas.
inline std::uint64_t nested_loop_count3(int a, int b, long h) {
  // chi = x^3 - t x^2 + s x - d with t trace, s sum of principal 2-minors.
  const long t_want = a - b;
  // (x-1)^3 = x^3 - 3x^2 + 3x - 1 ; (x-1)(x+1)^2 = x^3 + x^2 - x - 1.
  const long s_want = (a == 3) ? 3 : -1;
  std::uint64_t count = 0;
  for (long m00 = -h; m00 <= h; ++m00)
    for (long m01 = -h; m01 <= h; ++m01)
      for (long m02 = -h; m02 <= h; ++m02)
        for (long m10 = -h; m10 <= h; ++m10)
          for (long m11 = -h; m11 <= h; ++m11)
            for (long m12 = -h; m12 <= h; ++m12)
              for (long m20 = -h; m20 <= h; ++m20)
                for (long m21 = -h; m21 <= h; ++m21)
                  for (long m22 = -h; m22 <= h; ++m22) {
                    if (m00 + m11 + m22 != t_want)
                      continue;
                    long s = m00 * m11 - m01 * m10 + m00 * m22 - m02 * m20 +
                             m11 * m22 - m12 * m21;
                    if (s != s_want)
                      continue;
                    long d = m00 * (m11 * m22 - m12 * m21) -
                             m01 * (m10 * m22 - m12 * m20) +
                             m02 * (m10 * m21 - m11 * m20);
                    if (d == 1)
                      ++count;
                  }
  return count;
}

} // namespace testsupport

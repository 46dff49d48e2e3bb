#include "splitcount/linalg.hpp"

#include <algorithm>
#include <optional>

#include "splitcount/detail/berkowitz.hpp"
#include "splitcount/errors.hpp"

namespace splitcount {

Integer det(const IntegerMatrix &a) {
  if (!a.is_square())
    throw Error(ErrorCode::DimensionMismatch, "det: not square");
  const std::size_t n = a.rows();
  if (n == 0)
    return 1;
  IntegerMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0)
        ++r;
      if (r == n)
        return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntegerPoly char_poly(const IntegerMatrix &a) {
  if (!a.is_square())
    throw Error(ErrorCode::DimensionMismatch, "char_poly: not square");
  return IntegerPoly{
      detail::berkowitz<Integer>(a.entries(), a.rows(), Integer(0), Integer(1))};
}

namespace {

// Row index >= from with the smallest nonzero |m(r, col)|, lowest index on ties.
std::optional<std::size_t> min_pivot_row(const IntegerMatrix &m,
                                         std::size_t from, std::size_t col) {
  std::optional<std::size_t> best;
  for (std::size_t r = from; r < m.rows(); ++r) {
    if (m(r, col) == 0)
      continue;
    if (!best || abs(m(r, col)) < abs(m(*best, col)))
      best = r;
  }
  return best;
}

Integer floor_div(const Integer &a, const Integer &b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer trunc_div(const Integer &a, const Integer &b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

} // namespace

HnfResult hnf(const IntegerMatrix &input) {
  IntegerMatrix h = input;
  IntegerMatrix u = IntegerMatrix::identity(h.rows());
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
    bool found = false;
    for (;;) {
      auto p = min_pivot_row(h, row, col);
      if (!p)
        break;
      found = true;
      h.swap_rows(row, *p);
      u.swap_rows(row, *p);
      bool clean = true;
      for (std::size_t r = row + 1; r < h.rows(); ++r) {
        if (h(r, col) == 0)
          continue;
        Integer q = trunc_div(h(r, col), h(row, col));
        h.add_row_multiple(r, row, -q);
        u.add_row_multiple(r, row, -q);
        if (h(r, col) != 0)
          clean = false;
      }
      if (clean)
        break;
    }
    if (!found)
      continue;
    if (h(row, col) < 0) {
      h.negate_row(row);
      u.negate_row(row);
    }
    for (std::size_t r = 0; r < row; ++r) {
      Integer q = floor_div(h(r, col), h(row, col));
      h.add_row_multiple(r, row, -q);
      u.add_row_multiple(r, row, -q);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(h), std::move(u), std::move(pivots)};
}

std::size_t rank(const IntegerMatrix &a) { return hnf(a).rank(); }

std::vector<Integer> SnfResult::invariant_factors() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
    d.push_back(S(i, i));
  return d;
}

SnfResult snf(const IntegerMatrix &input) {
  IntegerMatrix s = input;
  IntegerMatrix u = IntegerMatrix::identity(s.rows());
  IntegerMatrix v = IntegerMatrix::identity(s.cols());
  const std::size_t diag = std::min(s.rows(), s.cols());
  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j)
          if (s(i, j) != 0 &&
              (!best || abs(s(i, j)) < abs(s(best->first, best->second))))
            best = std::make_pair(i, j);
      if (!best)
        return {std::move(s), std::move(u), std::move(v)};
      s.swap_rows(t, best->first);
      u.swap_rows(t, best->first);
      s.swap_cols(t, best->second);
      v.swap_cols(t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0)
          continue;
        Integer q = trunc_div(s(i, t), s(t, t));
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        clean = clean && s(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0)
          continue;
        Integer q = trunc_div(s(t, j), s(t, t));
        s.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        clean = clean && s(t, j) == 0;
      }
      if (!clean)
        continue;
      // Enforce divisibility of the remaining block by the pivot.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < s.rows() && !bad_row; ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (!bad_row)
        break;
      s.add_row_multiple(t, *bad_row, 1);
      u.add_row_multiple(t, *bad_row, 1);
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(s), std::move(u), std::move(v)};
}

namespace {

std::vector<IntegerVector> nonzero_rows(const IntegerMatrix &m) {
  std::vector<IntegerVector> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    IntegerVector r = m.row(i);
    if (std::any_of(r.begin(), r.end(), [](const Integer &x) { return x != 0; }))
      out.push_back(std::move(r));
  }
  return out;
}

std::vector<IntegerVector> canonical_basis(const std::vector<IntegerVector> &rows,
                                           std::size_t n) {
  if (rows.empty())
    return {};
  return nonzero_rows(hnf(IntegerMatrix::from_rows(rows, n)).H);
}

} // namespace

std::vector<IntegerVector> integer_kernel(const IntegerMatrix &m) {
  const std::size_t n = m.cols();
  HnfResult r = hnf(m.transpose());
  std::vector<IntegerVector> kernel;
  for (std::size_t i = r.rank(); i < n; ++i)
    kernel.push_back(r.U.row(i));
  return canonical_basis(kernel, n);
}

std::vector<IntegerVector> saturate(const std::vector<IntegerVector> &basis,
                                    std::size_t ambient_dim) {
  if (basis.empty())
    return {};
  IntegerMatrix m = IntegerMatrix::from_rows(basis, ambient_dim);
  if (rank(m) != basis.size())
    throw Error(ErrorCode::DependentInput, "saturate: vectors are dependent");
  // (L^perp)^perp over Z is the saturation of L.
  auto perp = integer_kernel(m);
  if (perp.empty()) {
    std::vector<IntegerVector> full;
    IntegerMatrix id = IntegerMatrix::identity(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i)
      full.push_back(id.row(i));
    return full;
  }
  return integer_kernel(IntegerMatrix::from_rows(perp, ambient_dim));
}

bool is_primitive(const std::vector<IntegerVector> &basis,
                  std::size_t ambient_dim) {
  if (basis.empty())
    return true;
  auto d = snf(IntegerMatrix::from_rows(basis, ambient_dim)).invariant_factors();
  return std::all_of(d.begin(), d.end(), [](const Integer &x) { return x == 1; });
}

IntegerMatrix inverse_unimodular(const IntegerMatrix &g) {
  if (!g.is_square())
    throw Error(ErrorCode::DimensionMismatch, "inverse: not square");
  HnfResult r = hnf(g);
  if (r.H != IntegerMatrix::identity(g.rows()))
    throw Error(ErrorCode::RankError, "inverse: matrix is not unimodular");
  return r.U;
}

BasisCompletion complete_basis(const std::vector<IntegerVector> &basis,
                               std::size_t n) {
  const std::size_t k = basis.size();
  if (k > n)
    throw Error(ErrorCode::DimensionMismatch, "complete_basis: too many vectors");
  IntegerMatrix g;
  if (k == 0) {
    g = IntegerMatrix::identity(n);
  } else {
    // U * B^T = [I_k; 0] exactly when the basis is primitive, and then the
    // leading columns of U^{-1} are the basis vectors.
    HnfResult r = hnf(IntegerMatrix::from_rows(basis, n).transpose());
    IntegerMatrix expected(n, k);
    for (std::size_t i = 0; i < k; ++i)
      expected(i, i) = 1;
    if (r.H != expected)
      throw Error(ErrorCode::InternalError,
                  "complete_basis: input does not span a primitive sublattice");
    g = std::move(r.U);
  }
  if (det(g) < 0)
    g.negate_row(n - 1);
  IntegerMatrix g_inv = inverse_unimodular(g);
  return {std::move(g), std::move(g_inv)};
}

IntegerMatrix conjugate(const IntegerMatrix &g, const IntegerMatrix &a,
                        const IntegerMatrix &g_inv) {
  return mat_mul(mat_mul(g, a), g_inv);
}

} // namespace splitcount

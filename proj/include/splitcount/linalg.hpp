#pragma once

#include <cstddef>
#include <vector>

#include "splitcount/integer_matrix.hpp"
#include "splitcount/poly.hpp"

namespace splitcount {

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer det(const IntegerMatrix &a);

std::size_t rank(const IntegerMatrix &a);

/// det(xI - A), computed without divisions.
IntegerPoly char_poly(const IntegerMatrix &a);

/// Row-style Hermite normal form: U * M = H.
///
/// H is in row echelon form with positive pivots, and every entry above a
/// pivot lies in [0, pivot). The pivot row in each column is chosen as the
/// smallest nonzero absolute value, ties broken by lowest row index.
struct HnfResult {
  IntegerMatrix H;
  IntegerMatrix U;
  std::vector<std::size_t> pivot_cols;

  std::size_t rank() const { return pivot_cols.size(); }
};

HnfResult hnf(const IntegerMatrix &m);

/// Smith normal form: U * M * V = S with d1 | d2 | ... on the diagonal.
struct SnfResult {
  IntegerMatrix S;
  IntegerMatrix U;
  IntegerMatrix V;

  std::vector<Integer> invariant_factors() const;
};

SnfResult snf(const IntegerMatrix &m);

/// Saturated basis of { v in Z^n : M v = 0 }, as rows, in Hermite form.
std::vector<IntegerVector> integer_kernel(const IntegerMatrix &m);

/// Basis of span_Q(L) intersected with Z^n. Throws DependentInput if the
/// input vectors are linearly dependent.
std::vector<IntegerVector> saturate(const std::vector<IntegerVector> &basis,
                                    std::size_t ambient_dim);

/// True when the rows span a primitive sublattice (all invariant factors 1).
bool is_primitive(const std::vector<IntegerVector> &basis,
                  std::size_t ambient_dim);

/// Inverse of a matrix with determinant +-1. Throws RankError otherwise.
IntegerMatrix inverse_unimodular(const IntegerMatrix &g);

/// Completes a primitive basis (rows) to a unimodular change of basis.
///
/// Returns g with det(g) = 1 whose inverse has the given vectors, up to the
/// sign of the last one when the basis is already full, as its leading
/// columns. Conjugating by g expresses a map in the completed basis.
struct BasisCompletion {
  IntegerMatrix g;
  IntegerMatrix g_inv;
};

BasisCompletion complete_basis(const std::vector<IntegerVector> &basis,
                               std::size_t ambient_dim);

/// g * A * g^{-1}
IntegerMatrix conjugate(const IntegerMatrix &g, const IntegerMatrix &a,
                        const IntegerMatrix &g_inv);

} // namespace splitcount

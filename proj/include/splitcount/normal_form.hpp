#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "splitcount/integer_matrix.hpp"
#include "splitcount/poly.hpp"

namespace splitcount {

/// g * A * g^{-1} = [[I_a + X, B], [0, -I_b + Y]] with X, Y strictly upper
/// triangular and det(g) = 1. The +1 eigenvalues come first.
struct BlockNormalForm {
  SplitPolySpec spec;
  IntegerMatrix g;
  IntegerMatrix X;
  IntegerMatrix Y;
  IntegerMatrix B;

  IntegerMatrix assemble() const;
};

/// Pair of partitions (weakly decreasing parts) of a and b.
struct JordanType {
  std::vector<int> plus;
  std::vector<int> minus;

  std::string to_string() const;
  friend bool operator==(const JordanType &, const JordanType &) = default;
  friend auto operator<=>(const JordanType &, const JordanType &) = default;
};

/// Saturated generalized eigenlattices ker(A - I)^n and ker(A + I)^n.
///
/// The two lattices span Z^n over Q, but not always over Z: `index` is
/// [Z^n : L+ (+) L-], which is 1 exactly when the stacked bases are
/// unimodular.
struct PrimarySplit {
  std::vector<IntegerVector> plus;
  std::vector<IntegerVector> minus;
  Integer index;
};

/// Throws CharPolyMismatch when det(A) != 1 or chi_A differs from `spec`.
void check_split_input(const IntegerMatrix &a, const SplitPolySpec &spec);

PrimarySplit primary_split(const IntegerMatrix &a, const SplitPolySpec &spec);

/// Conjugates A into upper block form, both diagonal blocks triangular.
BlockNormalForm block_reduce(const IntegerMatrix &a, const SplitPolySpec &spec);

/// Jordan partitions from the rank sequences of (A -+ I)^k.
JordanType jordan_type(const IntegerMatrix &a, const SplitPolySpec &spec);

/// Jordan type of a matrix already known to be in upper block form.
JordanType jordan_type(const BlockNormalForm &f);

struct NormalizedForm {
  BlockNormalForm form;
  bool exact = false;
};

/// Best-effort integral Jordan normalization of both diagonal blocks.
///
/// Uses elementary upper-unipotent moves, signed cyclic permutations and
/// sign flips; `exact` is true when every diagonal block ends with
/// super-diagonal entries in {0, 1} and zeros elsewhere. The conjugation
/// identity holds whether or not normalization succeeds.
NormalizedForm normalize_jordan(const BlockNormalForm &f);

/// True when N is strictly upper triangular with superdiagonal in {0,1}
/// and zeros elsewhere.
bool is_jordan_shaped(const IntegerMatrix &nilpotent);

/// g * A * g^{-1} = T upper triangular with T(i, i) = lambda, for A with
/// (A - lambda I) nilpotent. Built along the flag ker N subset ker N^2 ...
struct Triangularization {
  IntegerMatrix g;
  IntegerMatrix g_inv;
  IntegerMatrix T;
};

Triangularization triangularize(const IntegerMatrix &a, long lambda);

struct BoundedConjugator {
  IntegerMatrix g;
  IntegerMatrix U;
  Integer g_sup;
  Integer U_sup;
};

/// Conjugates a unipotent A to upper unitriangular form. Throws
/// NotUnipotent when chi_A != (x-1)^n.
BoundedConjugator bounded_conjugator(const IntegerMatrix &a);

/// Per band d = j - i (index d-1), max |n_ij| / H over the triangularized
/// unipotent. Exact rationals; `max_ratio` is the maximum over bands.
/// Throws NotUnipotent, or InvalidArgument when sup_norm(A) > H.
struct BandReport {
  std::vector<Rational> band_ratio;
  Rational max_ratio;
  BoundedConjugator conjugator;
};

BandReport band_bound_check(const IntegerMatrix &a, const Integer &height);

/// All partitions of m in weakly decreasing order, reverse lexicographic.
std::vector<std::vector<int>> partitions(int m);

/// Free parameter count for an upper block representative of a Jordan
/// type: sum C(l_i, 2) + cross-block entries, per eigenvalue, plus a*b.
long free_parameter_count(const JordanType &type);

} // namespace splitcount

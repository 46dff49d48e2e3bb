#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "splitcount/integer_matrix.hpp"

namespace splitcount {

/// Monic integer polynomial, coefficients stored lowest degree first.
struct IntegerPoly {
  std::vector<Integer> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }

  friend bool operator==(const IntegerPoly &, const IntegerPoly &) = default;
};

IntegerPoly poly_mul(const IntegerPoly &p, const IntegerPoly &q);
/// p(A) by Horner's rule over matrices.
IntegerMatrix poly_eval(const IntegerPoly &p, const IntegerMatrix &a);
std::string to_string(const IntegerPoly &p);

/// (x-1)^a (x+1)^b with b even, i.e. the characteristic polynomials that
/// are admissible for determinant-one matrices.
class SplitPolySpec {
public:
  /// Throws OddB when b is odd.
  SplitPolySpec(int a, int b);

  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  int n() const noexcept { return a_ + b_; }
  bool unipotent() const noexcept { return b_ == 0; }

  IntegerPoly poly() const;
  /// Canonical text, e.g. "(x-1)(x+1)^2" or "(x-1)^3".
  std::string to_string() const;

  friend bool operator==(const SplitPolySpec &, const SplitPolySpec &) = default;
  friend auto operator<=>(const SplitPolySpec &, const SplitPolySpec &) = default;

private:
  int a_;
  int b_;
};

/// Multiplicities (a, b) when p = (x-1)^a (x+1)^b, no parity check.
std::optional<std::pair<int, int>> split_multiplicities(const IntegerPoly &p);

} // namespace splitcount

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "splitcount/integer_matrix.hpp"
#include "splitcount/poly.hpp"

namespace splitcount {

/// #{A mod p^k : det A = 1, chi_A = (x-1)^a (x+1)^b mod p^k}, normalized
/// by p^{k n(n-1)/2}.
struct ResidueCount {
  int n = 0;
  SplitPolySpec spec{1, 0};
  std::int64_t p = 0;
  int k = 0;
  Integer raw = 0;
  Rational normalized = 0;
};

struct DensityOptions {
  unsigned threads = 1;
  Integer work_limit = 1'000'000'000;
};

bool is_prime(std::int64_t p);

/// Exhaustive count with trace pruning. Throws NotPrime, InvalidArgument
/// (k < 1) and WorkLimitExceeded when p^{k n^2} exceeds the limit.
ResidueCount residue_count(const SplitPolySpec &spec, std::int64_t p, int k,
                           const DensityOptions &opts = {});

struct KappaRow {
  ResidueCount count;
  /// |normalized(k) - normalized(k-1)| for k >= 2.
  std::optional<Rational> delta;
  /// p = 2 carries extra congruence conditions the lifting heuristic ignores.
  bool p2_caveat = false;
};

std::vector<KappaRow> kappa_table(const SplitPolySpec &spec,
                                  const std::vector<std::int64_t> &primes,
                                  int k_max, const DensityOptions &opts = {});

/// True when reducing every solution mod p^k to p^{k-1} yields exactly the
/// solution set mod p^{k-1}.
bool reduction_is_surjective(const SplitPolySpec &spec, std::int64_t p, int k,
                             const DensityOptions &opts = {});

} // namespace splitcount

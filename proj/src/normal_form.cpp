#include "splitcount/normal_form.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <utility>

#include "splitcount/errors.hpp"
#include "splitcount/linalg.hpp"

namespace splitcount {

IntegerMatrix BlockNormalForm::assemble() const {
  const std::size_t a = static_cast<std::size_t>(spec.a());
  const std::size_t b = static_cast<std::size_t>(spec.b());
  IntegerMatrix m(a + b);
  m.set_block(0, 0, shift_diagonal(X, 1));
  m.set_block(0, a, B);
  m.set_block(a, a, shift_diagonal(Y, -1));
  return m;
}

std::string JordanType::to_string() const {
  auto part = [](const std::vector<int> &p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i)
      s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
  };
  return "+" + part(plus) + " -" + part(minus);
}

void check_split_input(const IntegerMatrix &a, const SplitPolySpec &spec) {
  if (!a.is_square() || a.rows() != static_cast<std::size_t>(spec.n()))
    throw Error(ErrorCode::DimensionMismatch,
                "matrix dimension does not match " + spec.to_string());
  Integer d = det(a);
  if (d != 1)
    throw Error(ErrorCode::CharPolyMismatch,
                "determinant is " + d.get_str() + ", expected 1");
  IntegerPoly chi = char_poly(a);
  if (chi != spec.poly())
    throw Error(ErrorCode::CharPolyMismatch, "characteristic polynomial " +
                                                 splitcount::to_string(chi) +
                                                 " is not " + spec.to_string());
}

PrimarySplit primary_split(const IntegerMatrix &a, const SplitPolySpec &spec) {
  check_split_input(a, spec);
  const unsigned n = static_cast<unsigned>(a.rows());
  auto plus = integer_kernel(mat_pow(shift_diagonal(a, -1), n));
  auto minus = integer_kernel(mat_pow(shift_diagonal(a, 1), n));
  if (plus.size() != static_cast<std::size_t>(spec.a()) ||
      minus.size() != static_cast<std::size_t>(spec.b()))
    throw Error(ErrorCode::RankError, "generalized eigenlattice ranks (" +
                                          std::to_string(plus.size()) + ", " +
                                          std::to_string(minus.size()) +
                                          ") disagree with " + spec.to_string());
  std::vector<IntegerVector> stacked = plus;
  stacked.insert(stacked.end(), minus.begin(), minus.end());
  Integer index = abs(det(IntegerMatrix::from_rows(stacked, n)));
  return {std::move(plus), std::move(minus), std::move(index)};
}

namespace {

bool has_constant_diagonal(const IntegerMatrix &m, long lambda) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, i) != lambda)
      return false;
  return true;
}

} // namespace

Triangularization triangularize(const IntegerMatrix &a, long lambda) {
  const std::size_t m = a.rows();
  if (a.is_upper_triangular() && has_constant_diagonal(a, lambda))
    return {IntegerMatrix::identity(m), IntegerMatrix::identity(m), a};

  IntegerMatrix nil = shift_diagonal(a, -lambda);
  auto kernel = integer_kernel(nil);
  if (kernel.empty())
    throw Error(ErrorCode::InternalError,
                "triangularize: A - lambda I is not nilpotent");
  const std::size_t r = kernel.size();
  BasisCompletion c = complete_basis(kernel, m);
  IntegerMatrix a1 = conjugate(c.g, a, c.g_inv);
  if (!a1.block(r, 0, m - r, r).is_zero())
    throw Error(ErrorCode::InternalError, "triangularize: kernel not invariant");

  Triangularization sub = triangularize(a1.block(r, r, m - r, m - r), lambda);
  IntegerMatrix lift = direct_sum(IntegerMatrix::identity(r), sub.g);
  IntegerMatrix lift_inv = direct_sum(IntegerMatrix::identity(r), sub.g_inv);
  Triangularization out;
  out.g = mat_mul(lift, c.g);
  out.g_inv = mat_mul(c.g_inv, lift_inv);
  out.T = conjugate(lift, a1, lift_inv);
  return out;
}

BlockNormalForm block_reduce(const IntegerMatrix &a, const SplitPolySpec &spec) {
  PrimarySplit split = primary_split(a, spec);
  const std::size_t n = a.rows();
  const std::size_t na = static_cast<std::size_t>(spec.a());
  const std::size_t nb = static_cast<std::size_t>(spec.b());

  // L+ is A-invariant, so any basis starting with it gives a zero
  // lower-left block, even when L+ and L- are not complementary over Z.
  BasisCompletion c = complete_basis(split.plus, n);
  IntegerMatrix a1 = conjugate(c.g, a, c.g_inv);
  if (!a1.block(na, 0, nb, na).is_zero())
    throw Error(ErrorCode::InternalError, "block_reduce: L+ not invariant");

  Triangularization top = triangularize(a1.block(0, 0, na, na), 1);
  Triangularization bottom = triangularize(a1.block(na, na, nb, nb), -1);
  IntegerMatrix d = direct_sum(top.g, bottom.g);
  IntegerMatrix d_inv = direct_sum(top.g_inv, bottom.g_inv);
  IntegerMatrix reduced = conjugate(d, a1, d_inv);

  BlockNormalForm f{spec, mat_mul(d, c.g), shift_diagonal(reduced.block(0, 0, na, na), -1),
                    shift_diagonal(reduced.block(na, na, nb, nb), 1),
                    reduced.block(0, na, na, nb)};
  if (!f.X.is_strictly_upper_triangular() || !f.Y.is_strictly_upper_triangular() ||
      !reduced.block(na, 0, nb, na).is_zero() || det(f.g) != 1)
    throw Error(ErrorCode::InternalError, "block_reduce: invariants violated");
  return f;
}

namespace {

// Conjugate-partition arithmetic: ranks[k] = rank(N^k) restricted to the
// primary component, ranks[0] = its dimension.
std::vector<int> partition_from_ranks(const std::vector<std::size_t> &ranks) {
  std::vector<long> at_least; // at_least[k-1] = #blocks of size >= k
  for (std::size_t k = 1; k < ranks.size(); ++k)
    at_least.push_back(static_cast<long>(ranks[k - 1]) -
                       static_cast<long>(ranks[k]));
  std::vector<int> parts;
  for (std::size_t s = at_least.size(); s-- > 0;) {
    long exactly = at_least[s] - (s + 1 < at_least.size() ? at_least[s + 1] : 0);
    for (long j = 0; j < exactly; ++j)
      parts.push_back(static_cast<int>(s + 1));
  }
  return parts;
}

std::vector<int> eigen_partition(const IntegerMatrix &a, long lambda,
                                 int multiplicity) {
  const std::size_t n = a.rows();
  const IntegerMatrix nil = shift_diagonal(a, -lambda);
  // Off the lambda component A - lambda I is invertible and contributes
  // n - multiplicity to every rank.
  const std::size_t offset = n - static_cast<std::size_t>(multiplicity);
  std::vector<std::size_t> ranks{static_cast<std::size_t>(multiplicity)};
  IntegerMatrix power = IntegerMatrix::identity(n);
  for (int k = 1; k <= multiplicity; ++k) {
    power = mat_mul(power, nil);
    std::size_t r = rank(power);
    if (r < offset)
      throw Error(ErrorCode::RankError, "rank sequence below complement size");
    ranks.push_back(r - offset);
  }
  if (ranks.back() != 0)
    throw Error(ErrorCode::RankError, "generalized eigenspace too small");
  return partition_from_ranks(ranks);
}

std::vector<int> nilpotent_partition(const IntegerMatrix &nil) {
  std::vector<std::size_t> ranks{nil.rows()};
  IntegerMatrix power = IntegerMatrix::identity(nil.rows());
  for (std::size_t k = 1; k <= nil.rows(); ++k) {
    power = mat_mul(power, nil);
    ranks.push_back(rank(power));
  }
  return partition_from_ranks(ranks);
}

} // namespace

JordanType jordan_type(const IntegerMatrix &a, const SplitPolySpec &spec) {
  check_split_input(a, spec);
  return {eigen_partition(a, 1, spec.a()), eigen_partition(a, -1, spec.b())};
}

JordanType jordan_type(const BlockNormalForm &f) {
  return {nilpotent_partition(f.X), nilpotent_partition(f.Y)};
}

bool is_jordan_shaped(const IntegerMatrix &nil) {
  for (std::size_t i = 0; i < nil.rows(); ++i)
    for (std::size_t j = 0; j < nil.cols(); ++j) {
      const Integer &x = nil(i, j);
      if (j == i + 1 ? (x != 0 && x != 1) : x != 0)
        return false;
    }
  return true;
}

namespace {

// Running conjugation state: `m` is the current matrix and `g` the
// accumulated conjugator, so that m = g * A * g^{-1} holds after each move.
struct Conjugation {
  IntegerMatrix m;
  IntegerMatrix g;

  // E = I + t e_ij
  void elementary(std::size_t i, std::size_t j, const Integer &t) {
    if (t == 0)
      return;
    m.add_row_multiple(i, j, t);
    m.add_col_multiple(j, i, -t);
    g.add_row_multiple(i, j, t);
  }
  // diag(..., -1, ...); det -1, callers pair these up.
  void flip(std::size_t i) {
    m.negate_row(i);
    m.negate_col(i);
    g.negate_row(i);
  }
  // Swap i and i+1 then flip the new i+1: a det-one signed transposition.
  void signed_swap(std::size_t i) {
    m.swap_rows(i, i + 1);
    m.swap_cols(i, i + 1);
    g.swap_rows(i, i + 1);
    flip(i + 1);
  }
  void move(std::size_t from, std::size_t to) {
    for (; from < to; ++from)
      signed_swap(from);
    for (; from > to; --from)
      signed_swap(from - 1);
  }
};

struct BlockRange {
  std::size_t offset;
  std::size_t size;
};

// (#nonzero off-superdiagonal entries, sum of their magnitudes) in a block.
std::pair<std::size_t, Integer> off_superdiagonal_measure(const IntegerMatrix &m,
                                                          BlockRange blk) {
  std::size_t count = 0;
  Integer mass = 0;
  for (std::size_t i = 0; i < blk.size; ++i)
    for (std::size_t k = i + 2; k < blk.size; ++k) {
      const Integer &x = m(blk.offset + i, blk.offset + k);
      if (x != 0) {
        ++count;
        mass += abs(x);
      }
    }
  return {count, mass};
}

Integer trunc_quotient(const Integer &a, const Integer &b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// One bottom-up sweep clearing entries above the superdiagonal.
bool clearing_pass(Conjugation &c, BlockRange blk) {
  bool changed = false;
  const std::size_t o = blk.offset;
  auto at = [&](std::size_t i, std::size_t k) -> const Integer & {
    return c.m(o + i, o + k);
  };
  for (std::size_t i = blk.size; i-- > 0;) {
    for (std::size_t k = i + 2; k < blk.size; ++k) {
      if (at(i, k) == 0)
        continue;
      // Row pivot: E_{i,k-1}(t) adds t * N(k-1, k) to N(i, k).
      if (Integer p = at(k - 1, k); p != 0) {
        Integer t = -trunc_quotient(at(i, k), p);
        if (t != 0) {
          c.elementary(o + i, o + k - 1, t);
          changed = true;
        }
      }
      if (at(i, k) == 0)
        continue;
      // Column pivot: E_{i+1,k}(t) subtracts t * N(i, i+1) from N(i, k).
      if (Integer p = at(i, i + 1); p != 0) {
        Integer t = trunc_quotient(at(i, k), p);
        if (t != 0) {
          c.elementary(o + i + 1, o + k, t);
          changed = true;
        }
      }
    }
  }
  return changed;
}

// Tries cyclic moves that put an isolated entry onto the superdiagonal;
// accepted only when the off-superdiagonal measure strictly drops.
bool rotation_pass(Conjugation &c, BlockRange blk) {
  const std::size_t o = blk.offset;
  auto before = off_superdiagonal_measure(c.m, blk);
  for (std::size_t i = 0; i < blk.size; ++i)
    for (std::size_t k = i + 2; k < blk.size; ++k) {
      if (c.m(o + i, o + k) == 0)
        continue;
      for (auto [from, to] : {std::pair{k, i + 1}, std::pair{i, k - 1}}) {
        Conjugation trial = c;
        trial.move(o + from, o + to);
        IntegerMatrix nil = shift_diagonal(
            trial.m.block(o, o, blk.size, blk.size), -c.m(o, o));
        if (!nil.is_strictly_upper_triangular())
          continue;
        if (off_superdiagonal_measure(trial.m, blk) < before) {
          c = std::move(trial);
          return true;
        }
      }
    }
  return false;
}

// Chains of consecutive indices linked by nonzero superdiagonal entries.
std::vector<BlockRange> jordan_chains(const IntegerMatrix &m, BlockRange blk) {
  std::vector<BlockRange> chains;
  std::size_t start = 0;
  for (std::size_t i = 0; i < blk.size; ++i) {
    bool linked = i + 1 < blk.size &&
                  m(blk.offset + i, blk.offset + i + 1) != 0;
    if (!linked) {
      chains.push_back({blk.offset + start, i + 1 - start});
      start = i + 1;
    }
  }
  return chains;
}

} // namespace

NormalizedForm normalize_jordan(const BlockNormalForm &f) {
  const std::size_t na = static_cast<std::size_t>(f.spec.a());
  const std::size_t nb = static_cast<std::size_t>(f.spec.b());
  Conjugation c{f.assemble(), f.g};
  const std::vector<BlockRange> blocks{{0, na}, {na, nb}};

  for (const BlockRange &blk : blocks) {
    const std::size_t cap = 16 * (blk.size + 1) * (blk.size + 1);
    for (std::size_t iter = 0; iter < cap; ++iter) {
      bool changed = clearing_pass(c, blk);
      if (!changed)
        changed = rotation_pass(c, blk);
      if (!changed)
        break;
    }
  }

  // Signs: flip along each chain so superdiagonal -1 become +1, then
  // restore det(g) = 1 by flipping an entire odd-length chain if needed.
  std::size_t flips = 0;
  for (const BlockRange &blk : blocks)
    for (std::size_t i = 0; i + 1 < blk.size; ++i)
      if (c.m(blk.offset + i, blk.offset + i + 1) == -1) {
        c.flip(blk.offset + i + 1);
        ++flips;
      }
  if (flips % 2 == 1) {
    std::optional<BlockRange> odd;
    for (const BlockRange &blk : blocks)
      for (const BlockRange &chain : jordan_chains(c.m, blk))
        if (chain.size % 2 == 1 && !odd)
          odd = chain;
    if (odd) {
      for (std::size_t i = 0; i < odd->size; ++i)
        c.flip(odd->offset + i);
    } else {
      // No sign-neutral fix exists; leave one -1 at the end of a chain.
      for (const BlockRange &blk : blocks)
        if (blk.size > 0) {
          c.flip(blk.offset + blk.size - 1);
          break;
        }
    }
  }

  NormalizedForm out{{f.spec, std::move(c.g), shift_diagonal(c.m.block(0, 0, na, na), -1),
                      shift_diagonal(c.m.block(na, na, nb, nb), 1),
                      c.m.block(0, na, na, nb)},
                     false};
  out.exact = is_jordan_shaped(out.form.X) && is_jordan_shaped(out.form.Y);
  return out;
}

BoundedConjugator bounded_conjugator(const IntegerMatrix &a) {
  if (!a.is_square())
    throw Error(ErrorCode::DimensionMismatch, "bounded_conjugator: not square");
  if (char_poly(a) != SplitPolySpec(static_cast<int>(a.rows()), 0).poly())
    throw Error(ErrorCode::NotUnipotent, "characteristic polynomial is not (x-1)^n");
  Triangularization t = triangularize(a, 1);
  Integer gs = sup_norm(t.g);
  Integer us = sup_norm(t.T);
  return {std::move(t.g), std::move(t.T), std::move(gs), std::move(us)};
}

BandReport band_bound_check(const IntegerMatrix &a, const Integer &height) {
  if (height < 1)
    throw Error(ErrorCode::InvalidArgument, "height must be positive");
  if (sup_norm(a) > height)
    throw Error(ErrorCode::InvalidArgument, "sup_norm(A) exceeds the height");
  BandReport report{{}, Rational(0), bounded_conjugator(a)};
  const IntegerMatrix &u = report.conjugator.U;
  for (std::size_t d = 1; d < u.rows(); ++d) {
    Integer best = 0;
    for (std::size_t i = 0; i + d < u.rows(); ++i)
      best = std::max<Integer>(best, abs(u(i, i + d)));
    Rational ratio(best, height);
    ratio.canonicalize();
    report.max_ratio = std::max(report.max_ratio, ratio);
    report.band_ratio.push_back(std::move(ratio));
  }
  return report;
}

std::vector<std::vector<int>> partitions(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(m, m);
  return out;
}

long free_parameter_count(const JordanType &type) {
  auto block_params = [](const std::vector<int> &parts) {
    long internal = 0;
    long cross = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      internal += static_cast<long>(parts[i]) * (parts[i] - 1) / 2;
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        cross += static_cast<long>(parts[i]) * parts[j];
    }
    return internal + cross;
  };
  long a = 0;
  long b = 0;
  for (int p : type.plus)
    a += p;
  for (int p : type.minus)
    b += p;
  return block_params(type.plus) + block_params(type.minus) + a * b;
}

} // namespace splitcount

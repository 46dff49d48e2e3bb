#include "splitcount/density.hpp"

#include "splitcount/detail/berkowitz.hpp"
#include "splitcount/errors.hpp"
#include "splitcount/matrix_set.hpp"
#include "splitcount/parallel.hpp"

namespace splitcount {

namespace {

// Residue mod q with q small enough that products fit in 64 bits.
struct ModQ {
  std::int64_t v;
  std::int64_t q;

  friend ModQ operator+(ModQ x, ModQ y) { return {(x.v + y.v) % x.q, x.q}; }
  friend ModQ operator-(ModQ x, ModQ y) { return {(x.v - y.v + x.q) % x.q, x.q}; }
  friend ModQ operator*(ModQ x, ModQ y) { return {(x.v * y.v) % x.q, x.q}; }
};

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i)
    r *= base;
  return r;
}

std::int64_t mod(const Integer &x, std::int64_t q) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), Integer(static_cast<long>(q)).get_mpz_t());
  return r.get_si();
}

void validate(const SplitPolySpec &spec, std::int64_t p, int k,
              const DensityOptions &opts) {
  if (k < 1)
    throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (!is_prime(p))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  Integer work;
  mpz_ui_pow_ui(work.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(k * spec.n() * spec.n()));
  if (work > opts.work_limit)
    throw Error(ErrorCode::WorkLimitExceeded,
                "p^(k n^2) = " + work.get_str() + " exceeds the work limit");
  if (ipow(p, k) > 3'000'000'000LL)
    throw Error(ErrorCode::WorkLimitExceeded, "modulus too large");
}

// Exhaustive sweep over matrices mod q; the last diagonal entry is fixed
// by the trace residue.
template <class State, class MakeState, class Visit>
std::vector<State> sweep_residues(const SplitPolySpec &spec, std::int64_t q,
                                  unsigned threads, MakeState make_state,
                                  Visit visit) {
  const auto n = static_cast<std::size_t>(spec.n());
  std::vector<ModQ> target;
  for (const Integer &c : spec.poly().coeffs)
    target.push_back({mod(c, q), q});
  const std::int64_t trace = mod(Integer(spec.a() - spec.b()), q);
  const std::size_t last_diag = n * n - 1;
  std::vector<std::size_t> slots;
  for (std::size_t s = 0; s + 1 < n * n; ++s)
    slots.push_back(s);
  const auto uq = static_cast<std::size_t>(q);
  const std::size_t tasks = slots.empty() ? 1 : uq;

  return run_partitioned<State>(
      {tasks, threads}, make_state, [&](std::size_t task, State &state) {
        std::vector<std::int64_t> e(n * n, 0);
        std::vector<ModQ> m(n * n, ModQ{0, q});
        auto leaf = [&] {
          std::int64_t diag = 0;
          for (std::size_t i = 0; i + 1 < n; ++i)
            diag += e[i * n + i];
          e[last_diag] = ((trace - diag) % q + q) % q;
          for (std::size_t s = 0; s < e.size(); ++s)
            m[s] = {e[s], q};
          auto c = detail::berkowitz<ModQ>(m, n, ModQ{0, q}, ModQ{1 % q, q});
          for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i].v != target[i].v)
              return;
          visit(state, std::span<const std::int64_t>(e));
        };
        if (slots.empty()) {
          leaf();
          return;
        }
        e[slots[0]] = static_cast<std::int64_t>(task);
        // Odometer over the remaining slots.
        for (;;) {
          leaf();
          std::size_t d = 1;
          while (d < slots.size() && e[slots[d]] == q - 1) {
            e[slots[d]] = 0;
            ++d;
          }
          if (d >= slots.size())
            break;
          ++e[slots[d]];
        }
      });
}

MatrixSet residue_solutions(const SplitPolySpec &spec, std::int64_t q,
                            unsigned threads) {
  const auto n = static_cast<std::size_t>(spec.n());
  auto states = sweep_residues<MatrixSet>(
      spec, q, threads, [n] { return MatrixSet(n); },
      [](MatrixSet &s, std::span<const std::int64_t> e) { s.insert(e); });
  MatrixSet out(n);
  for (auto &s : states)
    out.merge(std::move(s));
  return out;
}

} // namespace

bool is_prime(std::int64_t p) {
  if (p < 2)
    return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

ResidueCount residue_count(const SplitPolySpec &spec, std::int64_t p, int k,
                           const DensityOptions &opts) {
  validate(spec, p, k, opts);
  const std::int64_t q = ipow(p, k);
  auto states = sweep_residues<std::uint64_t>(
      spec, q, opts.threads, [] { return std::uint64_t{0}; },
      [](std::uint64_t &c, std::span<const std::int64_t>) { ++c; });
  ResidueCount r;
  r.n = spec.n();
  r.spec = spec;
  r.p = p;
  r.k = k;
  for (auto c : states)
    r.raw += Integer(static_cast<unsigned long>(c));
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(k * spec.n() * (spec.n() - 1) / 2));
  r.normalized = Rational(r.raw, den);
  r.normalized.canonicalize();
  return r;
}

std::vector<KappaRow> kappa_table(const SplitPolySpec &spec,
                                  const std::vector<std::int64_t> &primes,
                                  int k_max, const DensityOptions &opts) {
  std::vector<KappaRow> rows;
  for (std::int64_t p : primes) {
    std::optional<Rational> previous;
    for (int k = 1; k <= k_max; ++k) {
      KappaRow row{residue_count(spec, p, k, opts), std::nullopt, p == 2};
      if (previous)
        row.delta = abs(row.count.normalized - *previous);
      previous = row.count.normalized;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

bool reduction_is_surjective(const SplitPolySpec &spec, std::int64_t p, int k,
                             const DensityOptions &opts) {
  if (k < 2)
    throw Error(ErrorCode::InvalidArgument, "reduction needs k >= 2");
  validate(spec, p, k, opts);
  const std::int64_t q = ipow(p, k);
  const std::int64_t q_prev = q / p;
  MatrixSet upper = residue_solutions(spec, q, opts.threads);
  MatrixSet lower = residue_solutions(spec, q_prev, opts.threads);
  MatrixSet image(upper.dim());
  upper.for_each([&](std::span<const std::int64_t> e) {
    std::vector<std::int64_t> r(e.begin(), e.end());
    for (auto &x : r)
      x %= q_prev;
    image.insert(r);
  });
  return image.size() == lower.size() && image.is_subset_of(lower);
}

} // namespace splitcount

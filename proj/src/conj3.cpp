#include "splitcount/conj3.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

#include "splitcount/parallel.hpp"

#include "splitcount/errors.hpp"

namespace splitcount::conj3 {

namespace {

IntegerMatrix from_entries(const Entries3<Integer> &e) {
  IntegerMatrix m(3);
  for (std::size_t k = 0; k < 9; ++k)
    m(k / 3, k % 3) = e[k];
  return m;
}

IntegerMatrix upper3(long diag_top, const TriParams &t) {
  IntegerMatrix m(3);
  m(0, 0) = diag_top;
  m(1, 1) = diag_top;
  m(2, 2) = 1;
  m(0, 1) = t.a;
  m(0, 2) = t.b;
  m(1, 2) = t.c;
  return m;
}

} // namespace

IntegerMatrix mixed_matrix(const TriParams &t) { return upper3(-1, t); }
IntegerMatrix unipotent_matrix(const TriParams &t) { return upper3(1, t); }

IntegerMatrix lower_matrix(const LowerParams &l) {
  IntegerMatrix m = IntegerMatrix::identity(3);
  m(1, 0) = l.u;
  m(2, 0) = l.v;
  m(2, 1) = l.w;
  return m;
}

IntegerMatrix lower_inverse(const LowerParams &l) {
  IntegerMatrix m = IntegerMatrix::identity(3);
  m(1, 0) = -l.u;
  m(2, 0) = l.u * l.w - l.v;
  m(2, 1) = -l.w;
  return m;
}

IntegerMatrix upper_inverse(const TriParams &t) {
  IntegerMatrix m = IntegerMatrix::identity(3);
  m(0, 1) = -t.a;
  m(0, 2) = t.a * t.c - t.b;
  m(1, 2) = -t.c;
  return m;
}

TriParams conj_upper_closed(const TriParams &t, const Integer &x,
                            const Integer &y, const Integer &z) {
  return {t.a, t.b + t.c * x - t.a * z + 2 * y, t.c + 2 * z};
}

IntegerMatrix conj_lower_closed(const TriParams &t, const LowerParams &l) {
  return from_entries(lower_mixed_entries<Integer>(t.a, t.b, t.c, l.u, l.v, l.w));
}

IntegerMatrix conj_lower_unipotent(const TriParams &t, const LowerParams &l) {
  return from_entries(
      lower_unipotent_entries<Integer>(t.a, t.b, t.c, l.u, l.v, l.w));
}

Range u_box(std::int64_t a, std::int64_t c, std::int64_t height, std::int64_t k) {
  if (height < 1 || k < 1)
    throw Error(ErrorCode::InvalidArgument, "u_box needs H >= 1 and K >= 1");
  const std::int64_t den = 1 + std::llabs(a) + std::llabs(c);
  const std::int64_t num = k * height;
  const std::int64_t m = (num + den - 1) / den;
  return {-m, m};
}

Range b_range(std::int64_t a, std::int64_t /*c*/, std::int64_t w,
              std::int64_t height) {
  if (height < 1)
    throw Error(ErrorCode::InvalidArgument, "b_range needs H >= 1");
  if (w == 0)
    return {-height, height};
  const std::int64_t m =
      std::min<std::int64_t>(height, (std::llabs(a) + height) / std::llabs(w));
  return {-m, m};
}

namespace {

using Wide = __int128;
using M3 = std::array<Wide, 9>;

M3 mul3(const M3 &x, const M3 &y) {
  M3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        r[i * 3 + j] += x[i * 3 + k] * y[k * 3 + j];
  return r;
}

constexpr M3 kIdentity{1, 0, 0, 0, 1, 0, 0, 0, 1};

Wide wabs(Wide x) { return x < 0 ? -x : x; }

struct Tally {
  std::uint64_t checks = 0;
  std::uint64_t mismatches = 0;
  Wide max_entry = 0;

  void record(bool ok, const M3 &m) {
    ++checks;
    if (!ok)
      ++mismatches;
    for (Wide x : m)
      max_entry = std::max(max_entry, wabs(x));
  }
};

void check_sextuple(const std::array<std::int64_t, 6> &p, Tally &t) {
  const Wide a = p[0], b = p[1], c = p[2], u = p[3], v = p[4], w = p[5];
  const M3 mixed{-1, a, b, 0, -1, c, 0, 0, 1};
  const M3 unip{1, a, b, 0, 1, c, 0, 0, 1};
  const M3 lower{1, 0, 0, u, 1, 0, v, w, 1};
  const M3 lower_inv{1, 0, 0, -u, 1, 0, u * w - v, -w, 1};
  t.record(mul3(lower, lower_inv) == kIdentity, kIdentity);

  const M3 lm = mul3(mul3(lower, mixed), lower_inv);
  t.record(lm == lower_mixed_entries<Wide>(a, b, c, u, v, w), lm);
  const M3 lu = mul3(mul3(lower, unip), lower_inv);
  t.record(lu == lower_unipotent_entries<Wide>(a, b, c, u, v, w), lu);

  // Reuse (u, v, w) as (x, y, z) for the upper conjugator.
  const M3 upper{1, u, v, 0, 1, w, 0, 0, 1};
  const M3 upper_inv{1, -u, u * w - v, 0, 1, -w, 0, 0, 1};
  t.record(mul3(upper, upper_inv) == kIdentity, kIdentity);
  const M3 um = mul3(mul3(upper, mixed), upper_inv);
  const M3 closed{-1, a, b + c * u - a * w + 2 * v, 0, -1, c + 2 * w, 0, 0, 1};
  t.record(um == closed, um);
}

Integer to_integer(Wide x) {
  const bool neg = x < 0;
  Wide m = neg ? -x : x;
  Integer r = static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64));
  r <<= 64;
  r += static_cast<unsigned long>(static_cast<std::uint64_t>(m));
  return neg ? Integer(-r) : r;
}

} // namespace

VerifyReport verify_closed_forms(const VerifyOptions &opts) {
  if (opts.box < 0 || opts.box > 10'000 || opts.range < 0 ||
      opts.range > 10'000)
    throw Error(ErrorCode::InvalidArgument, "box and range must lie in [0, 10^4]");
  const std::int64_t side = 2 * opts.box + 1;
  const std::uint64_t chunk = 4096;
  const std::uint64_t random_tasks = (opts.trials + chunk - 1) / chunk;
  const auto box_tasks = static_cast<std::uint64_t>(side * side);

  auto states = run_partitioned<Tally>(
      {static_cast<std::size_t>(box_tasks + random_tasks), opts.threads},
      [] { return Tally{}; },
      [&](std::size_t task, Tally &t) {
        if (task < box_tasks) {
          std::array<std::int64_t, 6> p{};
          p[0] = static_cast<std::int64_t>(task) / side - opts.box;
          p[1] = static_cast<std::int64_t>(task) % side - opts.box;
          for (std::int64_t x = -opts.box; x <= opts.box; ++x)
            for (std::int64_t y = -opts.box; y <= opts.box; ++y)
              for (std::int64_t z = -opts.box; z <= opts.box; ++z)
                for (std::int64_t q = -opts.box; q <= opts.box; ++q) {
                  p[2] = x;
                  p[3] = y;
                  p[4] = z;
                  p[5] = q;
                  check_sextuple(p, t);
                }
          return;
        }
        const std::uint64_t r = task - box_tasks;
        std::mt19937_64 rng(opts.seed ^ (0x9E3779B97F4A7C15ULL * (r + 1)));
        std::uniform_int_distribution<std::int64_t> dist(-opts.range, opts.range);
        const std::uint64_t end = std::min(opts.trials, (r + 1) * chunk);
        for (std::uint64_t i = r * chunk; i < end; ++i) {
          std::array<std::int64_t, 6> p{};
          for (auto &x : p)
            x = dist(rng);
          check_sextuple(p, t);
        }
      });

  VerifyReport out;
  Wide max_entry = 0;
  for (const Tally &t : states) {
    out.checks += t.checks;
    out.mismatches += t.mismatches;
    max_entry = std::max(max_entry, t.max_entry);
  }
  out.max_entry = to_integer(max_entry);
  return out;
}

} // namespace splitcount::conj3

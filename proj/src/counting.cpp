#include "splitcount/counting.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>

#include "splitcount/conj3.hpp"
#include "splitcount/detail/berkowitz.hpp"
#include "splitcount/detail/checked_int.hpp"
#include "splitcount/errors.hpp"
#include "splitcount/linalg.hpp"
#include "splitcount/parallel.hpp"

namespace splitcount {

std::string to_string(Method m) {
  switch (m) {
  case Method::brute: return "brute";
  case Method::param_mixed: return "param_mixed";
  case Method::param_unipotent: return "param_unipotent";
  case Method::block_box: return "block_box";
  }
  return "unknown";
}

std::string to_string(Norm n) { return n == Norm::sup ? "sup" : "frobenius"; }

Method parse_method(const std::string &s) {
  for (Method m : {Method::brute, Method::param_mixed, Method::param_unipotent,
                   Method::block_box})
    if (s == to_string(m))
      return m;
  throw Error(ErrorCode::InvalidArgument, "unknown method '" + s + "'");
}

Norm parse_norm(const std::string &s) {
  if (s == "sup")
    return Norm::sup;
  if (s == "frobenius" || s == "fro")
    return Norm::frobenius;
  throw Error(ErrorCode::InvalidArgument, "unknown norm '" + s + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::int64_t isqrt(std::int64_t x) {
  if (x <= 0)
    return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x)
    --r;
  while ((r + 1) * (r + 1) <= x)
    ++r;
  return r;
}

std::vector<std::int64_t> target_coefficients(const SplitPolySpec &spec) {
  std::vector<std::int64_t> t;
  for (const Integer &c : spec.poly().coeffs)
    t.push_back(c.get_si());
  return t;
}

// Characteristic polynomial of a small int64 matrix; exact via big integers
// when the checked path overflows.
std::vector<Integer> char_poly_exact(std::span<const std::int64_t> e,
                                     std::size_t n) {
  try {
    std::vector<detail::CheckedI64> m(e.begin(), e.end());
    auto c = detail::berkowitz<detail::CheckedI64>(m, n, 0, 1);
    std::vector<Integer> out;
    for (auto x : c)
      out.emplace_back(static_cast<long>(x.v));
    return out;
  } catch (const detail::Overflow &) {
    return char_poly(IntegerMatrix::from_int64(n, e)).coeffs;
  }
}

bool matches_target(std::span<const std::int64_t> e, std::size_t n,
                    const std::vector<std::int64_t> &target) {
  auto c = char_poly_exact(e, n);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != target[k])
      return false;
  return true;
}

// Depth-first enumeration of integer matrices in a sup or Frobenius ball
// with the prescribed characteristic polynomial.
class BruteEnumerator {
public:
  BruteEnumerator(const SplitPolySpec &spec, std::int64_t height, Norm norm,
                  bool prune)
      : n_(static_cast<std::size_t>(spec.n())), height_(height), norm_(norm),
        prune_(prune), target_(target_coefficients(spec)),
        trace_(spec.a() - spec.b()) {
    const std::size_t n = n_;
    if (prune_) {
      for (std::size_t i = 0; i + 1 < n; ++i)
        slots_.push_back(i * n + i);
      trace_slot_ = (n - 1) * n + (n - 1);
      if (n >= 2)
        solved_slot_ = (n - 1) * n + (n - 2);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j && i * n + j != solved_slot_)
            slots_.push_back(i * n + j);
    } else {
      for (std::size_t k = 0; k < n * n; ++k)
        slots_.push_back(k);
    }
    split_depth_ = std::min<std::size_t>(2, slots_.size());
    const auto width = static_cast<std::size_t>(2 * height_ + 1);
    tasks_ = 1;
    for (std::size_t d = 0; d < split_depth_; ++d)
      tasks_ *= width;
  }

  std::size_t tasks() const { return tasks_; }

  template <class Emit> void run_task(std::size_t task, Emit &&emit) const {
    std::vector<std::int64_t> forced(split_depth_);
    const auto width = static_cast<std::size_t>(2 * height_ + 1);
    for (std::size_t d = split_depth_; d-- > 0;) {
      forced[d] = static_cast<std::int64_t>(task % width) - height_;
      task /= width;
    }
    std::vector<std::int64_t> e(n_ * n_, 0);
    dfs(0, e, budget0(), 0, forced, emit);
  }

private:
  std::int64_t budget0() const {
    return norm_ == Norm::frobenius ? height_ * height_ : 0;
  }

  std::int64_t max_abs(std::int64_t budget) const {
    return norm_ == Norm::sup ? height_ : isqrt(budget);
  }

  bool is_diag_slot(std::size_t slot) const { return slot / n_ == slot % n_; }

  template <class Emit>
  void dfs(std::size_t depth, std::vector<std::int64_t> &e, std::int64_t budget,
           std::int64_t diag_sum, const std::vector<std::int64_t> &forced,
           Emit &emit) const {
    if (depth == slots_.size()) {
      leaf(e, budget, diag_sum, emit);
      return;
    }
    const std::size_t slot = slots_[depth];
    const std::int64_t bound = max_abs(budget);
    std::int64_t lo = -bound;
    std::int64_t hi = bound;
    if (depth < forced.size()) {
      if (forced[depth] < lo || forced[depth] > hi)
        return;
      lo = hi = forced[depth];
    }
    const bool diag = prune_ && is_diag_slot(slot);
    for (std::int64_t x = lo; x <= hi; ++x) {
      const std::int64_t next_budget =
          norm_ == Norm::frobenius ? budget - x * x : budget;
      if (next_budget < 0)
        continue;
      if (diag) {
        // Remaining diagonal entries (including the determined one) must be
        // able to reach the trace.
        const std::int64_t remaining =
            static_cast<std::int64_t>(n_ - 1 - slot / n_);
        const std::int64_t need = trace_ - (diag_sum + x);
        if (std::llabs(need) > remaining * max_abs(next_budget))
          continue;
      }
      e[slot] = x;
      dfs(depth + 1, e, next_budget, diag ? diag_sum + x : diag_sum, forced,
          emit);
    }
    e[slot] = 0;
  }

  template <class Emit>
  void leaf(std::vector<std::int64_t> &e, std::int64_t budget,
            std::int64_t diag_sum, Emit &emit) const {
    if (!prune_) {
      if (matches_target(e, n_, target_))
        emit(std::span<const std::int64_t>(e));
      return;
    }
    const std::int64_t last = trace_ - diag_sum;
    if (std::llabs(last) > max_abs(budget))
      return;
    if (norm_ == Norm::frobenius) {
      budget -= last * last;
      if (budget < 0)
        return;
    }
    e[trace_slot_] = last;
    if (n_ < 2) {
      if (matches_target(e, n_, target_))
        emit(std::span<const std::int64_t>(e));
      return;
    }
    // Every coefficient of det(xI - A) is affine in one off-diagonal entry.
    e[solved_slot_] = 0;
    auto c0 = char_poly_exact(e, n_);
    e[solved_slot_] = 1;
    auto c1 = char_poly_exact(e, n_);
    const std::int64_t bound = max_abs(budget);
    std::optional<Integer> forced_value;
    bool feasible = true;
    for (std::size_t k = 0; k < c0.size() && feasible; ++k) {
      Integer slope = c1[k] - c0[k];
      Integer gap = Integer(static_cast<long>(target_[k])) - c0[k];
      if (slope == 0) {
        feasible = gap == 0;
        continue;
      }
      if (!mpz_divisible_p(gap.get_mpz_t(), slope.get_mpz_t())) {
        feasible = false;
        continue;
      }
      Integer x = gap / slope;
      if (forced_value && *forced_value != x)
        feasible = false;
      forced_value = x;
    }
    if (feasible) {
      if (forced_value) {
        if (abs(*forced_value) <= bound) {
          e[solved_slot_] = forced_value->get_si();
          emit(std::span<const std::int64_t>(e));
        }
      } else {
        for (std::int64_t x = -bound; x <= bound; ++x) {
          e[solved_slot_] = x;
          emit(std::span<const std::int64_t>(e));
        }
      }
    }
    e[solved_slot_] = 0;
    e[trace_slot_] = 0;
  }

  std::size_t n_;
  std::int64_t height_;
  Norm norm_;
  bool prune_;
  std::vector<std::int64_t> target_;
  std::int64_t trace_;
  std::vector<std::size_t> slots_;
  std::size_t trace_slot_ = 0;
  std::size_t solved_slot_ = static_cast<std::size_t>(-1);
  std::size_t split_depth_ = 0;
  std::size_t tasks_ = 1;
};

void check_brute_inputs(const SplitPolySpec &spec, std::int64_t height,
                        const BruteOptions &opts) {
  if (height < 0)
    throw Error(ErrorCode::InvalidArgument, "height must be nonnegative");
  if (spec.n() > 8)
    throw Error(ErrorCode::InvalidArgument, "n > 8 is not supported");
  Integer work = brute_work_estimate(spec.n(), height);
  if (!opts.force && work > opts.work_limit)
    throw Error(ErrorCode::WorkLimitExceeded,
                "brute force over (2H+1)^(n^2) = " + work.get_str() +
                    " matrices exceeds the work limit " +
                    opts.work_limit.get_str() + " (use --force)");
}

} // namespace

Integer brute_work_estimate(int n, std::int64_t height) {
  Integer w;
  mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(2 * height + 1),
                static_cast<unsigned long>(n * n));
  return w;
}

CountRecord brute_force_count(const SplitPolySpec &spec, std::int64_t height,
                              const BruteOptions &opts) {
  check_brute_inputs(spec, height, opts);
  const auto start = Clock::now();
  BruteEnumerator en(spec, height, opts.norm, opts.prune);
  auto states = run_partitioned<std::uint64_t>(
      {en.tasks(), opts.threads}, [] { return std::uint64_t{0}; },
      [&](std::size_t task, std::uint64_t &count) {
        en.run_task(task, [&](std::span<const std::int64_t>) { ++count; });
      });
  Integer total = 0;
  for (auto c : states)
    total += Integer(static_cast<unsigned long>(c));
  return {Method::brute, spec, opts.norm, height, total, true,
          seconds_since(start)};
}

MatrixSet brute_force_set(const SplitPolySpec &spec, std::int64_t height,
                          const BruteOptions &opts) {
  check_brute_inputs(spec, height, opts);
  const auto n = static_cast<std::size_t>(spec.n());
  BruteEnumerator en(spec, height, opts.norm, opts.prune);
  auto states = run_partitioned<MatrixSet>(
      {en.tasks(), opts.threads}, [n] { return MatrixSet(n); },
      [&](std::size_t task, MatrixSet &set) {
        en.run_task(task,
                    [&](std::span<const std::int64_t> e) { set.insert(e); });
      });
  MatrixSet out(n);
  for (auto &s : states)
    out.merge(std::move(s));
  return out;
}

StratifiedCount jordan_stratified_count(const SplitPolySpec &spec,
                                        std::int64_t height,
                                        const BruteOptions &opts) {
  check_brute_inputs(spec, height, opts);
  const auto start = Clock::now();
  const auto n = static_cast<std::size_t>(spec.n());
  BruteEnumerator en(spec, height, opts.norm, opts.prune);
  auto states = run_partitioned<Strata>(
      {en.tasks(), opts.threads}, [] { return Strata{}; },
      [&](std::size_t task, Strata &strata) {
        en.run_task(task, [&](std::span<const std::int64_t> e) {
          strata[jordan_type(IntegerMatrix::from_int64(n, e), spec)] += 1;
        });
      });
  StratifiedCount out;
  Integer total = 0;
  for (auto &s : states)
    for (auto &[type, count] : s) {
      out.strata[type] += count;
      total += count;
    }
  out.total = {Method::brute, spec, opts.norm, height, total, true,
               seconds_since(start)};
  return out;
}

namespace {

bool is_mixed3(const SplitPolySpec &spec) { return spec.a() == 1 && spec.b() == 2; }
bool is_unipotent3(const SplitPolySpec &spec) {
  return spec.a() == 3 && spec.b() == 0;
}

conj3::Range sweep_b_range(std::int64_t a, std::int64_t c, std::int64_t w,
                           std::int64_t height, BRangeMode mode) {
  if (mode == BRangeMode::crude)
    return {-height, height};
  return conj3::b_range(a, c, w, height);
}

// U(x,y,z) B U(x,y,z)^{-1} in checked arithmetic; nullopt on overflow.
std::optional<std::array<std::int64_t, 9>>
conjugate_upper(const std::array<std::int64_t, 9> &m, std::int64_t x,
                std::int64_t y, std::int64_t z) {
  using detail::CheckedI64;
  try {
    const std::array<CheckedI64, 9> up{1, x, y, 0, 1, z, 0, 0, 1};
    const std::array<CheckedI64, 9> inv{1, -x, CheckedI64(x) * z - y, 0, 1, -z,
                                        0, 0, 1};
    std::array<CheckedI64, 9> tmp{};
    std::array<std::int64_t, 9> out{};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        CheckedI64 s = 0;
        for (std::size_t k = 0; k < 3; ++k)
          s = s + up[i * 3 + k] * CheckedI64(m[k * 3 + j]);
        tmp[i * 3 + j] = s;
      }
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        CheckedI64 s = 0;
        for (std::size_t k = 0; k < 3; ++k)
          s = s + tmp[i * 3 + k] * inv[k * 3 + j];
        out[i * 3 + j] = s.v;
      }
    return out;
  } catch (const detail::Overflow &) {
    return std::nullopt;
  }
}

bool within_height(const std::array<std::int64_t, 9> &m, std::int64_t height) {
  return std::all_of(m.begin(), m.end(),
                     [height](std::int64_t x) { return std::llabs(x) <= height; });
}

} // namespace

Integer param_work_estimate(std::int64_t height, const ParamOptions &opts) {
  Integer total = 0;
  const Integer upper = (2 * opts.upper_radius + 1) * (2 * opts.upper_radius + 1) *
                        (2 * opts.upper_radius + 1);
  for (std::int64_t a = -height; a <= height; ++a)
    for (std::int64_t c = -height; c <= height; ++c) {
      auto box = conj3::u_box(a, c, height, opts.box_constant);
      Integer per_w = 0;
      for (std::int64_t w = box.lo; w <= box.hi; ++w)
        per_w += static_cast<long>(sweep_b_range(a, c, w, height, opts.b_mode).size());
      total += per_w * static_cast<long>(box.size()) * static_cast<long>(box.size());
    }
  return total * upper;
}

MatrixSet param_image(const SplitPolySpec &spec, std::int64_t height,
                      const ParamOptions &opts) {
  if (!is_mixed3(spec) && !is_unipotent3(spec))
    throw Error(ErrorCode::InvalidArgument,
                "parametrized sweeps exist only for (x+1)^2(x-1) and (x-1)^3");
  if (height < 1)
    throw Error(ErrorCode::InvalidArgument, "parametrized sweeps need H >= 1");
  if (opts.box_constant < 1 || opts.upper_radius < 0)
    throw Error(ErrorCode::InvalidArgument, "K must be >= 1, upper radius >= 0");
  Integer work = param_work_estimate(height, opts);
  if (!opts.force && work > opts.work_limit)
    throw Error(ErrorCode::WorkLimitExceeded,
                "parametrized sweep visits " + work.get_str() +
                    " sextuples, above the work limit (use --force)");
  // Every closed-form entry is bounded by 16 H (M+1)^3 with M = K H.
  {
    Integer m = Integer(static_cast<long>(opts.box_constant)) * height + 1;
    Integer bound = 16 * Integer(static_cast<long>(height)) * m * m * m;
    if (bound >= Integer("4611686018427387904"))
      throw Error(ErrorCode::WorkLimitExceeded,
                  "height too large for the 64-bit parametrized sweep");
  }

  const bool mixed = is_mixed3(spec);
  const auto width = static_cast<std::size_t>(2 * height + 1);
  const std::int64_t r = opts.upper_radius;
  auto states = run_partitioned<MatrixSet>(
      {width * width, opts.threads}, [] { return MatrixSet(3); },
      [&](std::size_t task, MatrixSet &set) {
        const std::int64_t a = static_cast<std::int64_t>(task / width) - height;
        const std::int64_t c = static_cast<std::int64_t>(task % width) - height;
        const auto box = conj3::u_box(a, c, height, opts.box_constant);
        for (std::int64_t u = box.lo; u <= box.hi; ++u)
          for (std::int64_t v = box.lo; v <= box.hi; ++v)
            for (std::int64_t w = box.lo; w <= box.hi; ++w) {
              const auto br = sweep_b_range(a, c, w, height, opts.b_mode);
              for (std::int64_t b = br.lo; b <= br.hi; ++b) {
                const auto m =
                    mixed ? conj3::lower_mixed_entries<std::int64_t>(a, b, c, u, v, w)
                          : conj3::lower_unipotent_entries<std::int64_t>(a, b, c, u,
                                                                         v, w);
                if (r == 0) {
                  if (within_height(m, height))
                    set.insert(m);
                  continue;
                }
                for (std::int64_t x = -r; x <= r; ++x)
                  for (std::int64_t y = -r; y <= r; ++y)
                    for (std::int64_t z = -r; z <= r; ++z) {
                      auto mc = conjugate_upper(m, x, y, z);
                      if (mc && within_height(*mc, height))
                        set.insert(*mc);
                    }
              }
            }
      });
  MatrixSet out(3);
  for (auto &s : states)
    out.merge(std::move(s));
  return out;
}

namespace {

CountRecord param_count(const SplitPolySpec &spec, Method method,
                        std::int64_t height, const ParamOptions &opts) {
  const auto start = Clock::now();
  MatrixSet image = param_image(spec, height, opts);
  return {method, spec, Norm::sup, height,
          Integer(static_cast<unsigned long>(image.size())), true,
          seconds_since(start)};
}

} // namespace

CountRecord param_count_mixed(std::int64_t height, const ParamOptions &opts) {
  return param_count(SplitPolySpec(1, 2), Method::param_mixed, height, opts);
}

CountRecord param_count_unipotent(std::int64_t height, const ParamOptions &opts) {
  return param_count(SplitPolySpec(3, 0), Method::param_unipotent, height, opts);
}

MatrixSet block_box_set(const SplitPolySpec &spec, std::int64_t height) {
  if (height < 0)
    throw Error(ErrorCode::InvalidArgument, "height must be nonnegative");
  const auto n = static_cast<std::size_t>(spec.n());
  const auto na = static_cast<std::size_t>(spec.a());
  std::vector<std::size_t> free_slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      free_slots.push_back(i * n + j);
  Integer work = brute_work_estimate(1, height);
  mpz_pow_ui(work.get_mpz_t(), work.get_mpz_t(), free_slots.size());
  if (work > 100'000'000)
    throw Error(ErrorCode::WorkLimitExceeded, "block box too large to enumerate");

  std::vector<std::int64_t> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    e[i * n + i] = i < na ? 1 : -1;
  for (std::size_t s : free_slots)
    e[s] = -height;
  MatrixSet set(n);
  if (free_slots.empty()) {
    set.insert(e);
    return set;
  }
  // Odometer over the free upper entries.
  for (;;) {
    set.insert(e);
    std::size_t k = 0;
    while (k < free_slots.size() && e[free_slots[k]] == height) {
      e[free_slots[k]] = -height;
      ++k;
    }
    if (k == free_slots.size())
      break;
    ++e[free_slots[k]];
  }
  return set;
}

CountRecord block_box_count(const SplitPolySpec &spec, std::int64_t height) {
  if (height < 0)
    throw Error(ErrorCode::InvalidArgument, "height must be nonnegative");
  const auto start = Clock::now();
  const unsigned long params =
      static_cast<unsigned long>(spec.n()) * (spec.n() - 1) / 2;
  Integer count;
  mpz_ui_pow_ui(count.get_mpz_t(), static_cast<unsigned long>(2 * height + 1),
                params);
  if (spec.n() <= 3 && height <= 3) {
    auto set = block_box_set(spec, height);
    if (Integer(static_cast<unsigned long>(set.size())) != count)
      throw Error(ErrorCode::InternalError,
                  "block box enumeration disagrees with (2H+1)^(n(n-1)/2)");
  }
  return {Method::block_box, spec, Norm::sup, height, count, true,
          seconds_since(start)};
}

CoverageReport coverage_audit(const SplitPolySpec &spec, std::int64_t height,
                              const ParamOptions &opts) {
  if (!is_mixed3(spec) && !is_unipotent3(spec))
    throw Error(ErrorCode::InvalidArgument,
                "coverage audit exists only for (x+1)^2(x-1) and (x-1)^3");
  BruteOptions bopts;
  static_cast<SweepOptions &>(bopts) = opts;
  MatrixSet brute = brute_force_set(spec, height, bopts);
  MatrixSet image(3);
  if (height >= 1)
    image = param_image(spec, height, opts);

  CoverageReport r;
  r.height = height;
  r.brute_set_size = brute.size();
  r.image_set_size = image.size();
  r.intersection_size = image.intersection_size(brute);
  const IntegerPoly target = spec.poly();
  image.for_each([&](std::span<const std::int64_t> e) {
    IntegerMatrix m = IntegerMatrix::from_int64(3, e);
    if (det(m) != 1 || char_poly(m) != target)
      ++r.invalid_image;
  });
  r.soundness = r.invalid_image == 0 && r.intersection_size == r.image_set_size;
  r.coverage_ratio = r.brute_set_size == 0
                         ? 1.0
                         : static_cast<double>(r.intersection_size) /
                               static_cast<double>(r.brute_set_size);
  return r;
}

GrowthFit fit_exponent(const std::vector<CountRecord> &records) {
  if (records.size() < 3)
    throw Error(ErrorCode::InsufficientPoints,
                "need at least 3 records, got " + std::to_string(records.size()));
  const CountRecord &first = records.front();
  std::vector<CountRecord> sorted = records;
  for (const auto &r : sorted)
    if (r.method != first.method || !(r.spec == first.spec) || r.norm != first.norm)
      throw Error(ErrorCode::InvalidArgument,
                  "records mix methods, polynomials or norms");
  std::sort(sorted.begin(), sorted.end(),
            [](const CountRecord &x, const CountRecord &y) { return x.height < y.height; });
  GrowthFit fit;
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto &r = sorted[i];
    if (i > 0 && r.height == sorted[i - 1].height)
      throw Error(ErrorCode::InvalidArgument, "heights must be distinct");
    if (r.height < 1 || r.count <= 0)
      throw Error(ErrorCode::InvalidArgument,
                  "log-log fit needs positive heights and counts");
    fit.points.emplace_back(r.height, r.count);
    xs.push_back(std::log(static_cast<double>(r.height)));
    // log of a big integer: mantissa and binary exponent.
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, r.count.get_mpz_t());
    ys.push_back(std::log(mant) + static_cast<double>(exp2) * std::log(2.0));
  }
  const double k = static_cast<double>(xs.size());
  double mx = 0;
  double my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= k;
  my /= k;
  double sxx = 0;
  double sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double res = ys[i] - (fit.intercept + fit.slope * xs[i]);
    fit.residual += res * res;
  }
  return fit;
}

NormComparison norm_comparison(const SplitPolySpec &spec, std::int64_t height,
                               const SweepOptions &opts) {
  BruteOptions sup;
  static_cast<SweepOptions &>(sup) = opts;
  sup.norm = Norm::sup;
  BruteOptions fro = sup;
  fro.norm = Norm::frobenius;
  NormComparison out{brute_force_count(spec, height, sup),
                     brute_force_count(spec, height, fro),
                     brute_force_count(spec, spec.n() * height, fro), false};
  out.sandwich_holds = out.frobenius.count <= out.sup.count &&
                       out.sup.count <= out.frobenius_scaled.count;
  return out;
}

} // namespace splitcount

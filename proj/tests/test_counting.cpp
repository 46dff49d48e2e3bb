#include "doctest.h"

#include <set>
#include <vector>

#include "splitcount/conj3.hpp"
#include "splitcount/counting.hpp"
#include "splitcount/errors.hpp"
#include "splitcount/linalg.hpp"
#include "support.hpp"

using namespace splitcount;

namespace {

using Key = std::vector<std::int64_t>;

std::set<Key> to_std_set(const MatrixSet &s) {
  std::set<Key> out;
  s.for_each([&](std::span<const std::int64_t> e) { out.emplace(e.begin(), e.end()); });
  return out;
}

// Nested loops over the full sextuple box with the crude |b| <= H range and
// plain big-integer products.
std::set<Key> reference_image(bool mixed, long h, long k) {
  std::set<Key> out;
  for (long a = -h; a <= h; ++a)
    for (long c = -h; c <= h; ++c) {
      const long m = (k * h + (1 + std::labs(a) + std::labs(c)) - 1) /
                     (1 + std::labs(a) + std::labs(c));
      for (long b = -h; b <= h; ++b)
        for (long u = -m; u <= m; ++u)
          for (long v = -m; v <= m; ++v)
            for (long w = -m; w <= m; ++w) {
              conj3::TriParams t{a, b, c};
              conj3::LowerParams l{u, v, w};
              IntegerMatrix core = mixed ? conj3::mixed_matrix(t) : conj3::unipotent_matrix(t);
              IntegerMatrix r = testsupport::naive_mul(
                  testsupport::naive_mul(conj3::lower_matrix(l), core), conj3::lower_inverse(l));
              if (sup_norm(r) > h)
                continue;
              Key key;
              for (const Integer &x : r.entries())
                key.push_back(x.get_si());
              out.insert(key);
            }
    }
  return out;
}

std::uint64_t exhaustive_count2(long h, bool frobenius) {
  std::uint64_t count = 0;
  for (long p = -h; p <= h; ++p)
    for (long q = -h; q <= h; ++q)
      for (long r = -h; r <= h; ++r)
        for (long s = -h; s <= h; ++s) {
          if (frobenius && p * p + q * q + r * r + s * s > h * h)
            continue;
          if (p + s == 2 && p * s - q * r == 1)
            ++count;
        }
  return count;
}

} // namespace

TEST_CASE("brute force small values") {
  CHECK(brute_force_count(SplitPolySpec(2, 0), 1).count == 5);
  auto s = brute_force_set(SplitPolySpec(2, 0), 1);
  CHECK(s.size() == 5);
  for (auto m : {Key{1, 0, 0, 1}, Key{1, 1, 0, 1}, Key{1, -1, 0, 1}, Key{1, 0, 1, 1},
                 Key{1, 0, -1, 1}})
    CHECK(s.contains(m));
  CHECK(brute_force_count(SplitPolySpec(1, 2), 0).count == 0);
  CHECK(brute_force_count(SplitPolySpec(3, 0), 0).count == 0);
  CHECK(brute_force_count(SplitPolySpec(1, 0), 3).count == 1);

  Integer h1 = brute_force_count(SplitPolySpec(3, 0), 1).count;
  CHECK(h1 >= 27);
  CHECK(h1 == testsupport::nested_loop_count3(3, 0, 1));
  CHECK(brute_force_count(SplitPolySpec(1, 2), 1).count ==
        testsupport::nested_loop_count3(1, 2, 1));

  for (long h = 1; h <= 4; ++h)
    CHECK(brute_force_count(SplitPolySpec(2, 0), h).count == exhaustive_count2(h, false));
}

TEST_CASE("pruning does not change the count") {
  BruteOptions raw;
  raw.prune = false;
  for (const SplitPolySpec &spec : {SplitPolySpec(2, 0), SplitPolySpec(0, 2)})
    for (long h = 0; h <= 3; ++h) {
      CHECK(brute_force_count(spec, h, raw).count == brute_force_count(spec, h).count);
      BruteOptions fro;
      fro.norm = Norm::frobenius;
      BruteOptions fro_raw = fro;
      fro_raw.prune = false;
      CHECK(brute_force_count(spec, h, fro_raw).count == brute_force_count(spec, h, fro).count);
    }
  for (const SplitPolySpec &spec : {SplitPolySpec(3, 0), SplitPolySpec(1, 2)}) {
    auto a = brute_force_set(spec, 1, raw);
    auto b = brute_force_set(spec, 1);
    CHECK(a.size() == b.size());
    CHECK(a.is_subset_of(b));
  }
}

TEST_CASE("brute force sets are closed under transpose") {
  for (const SplitPolySpec &spec : {SplitPolySpec(3, 0), SplitPolySpec(1, 2)}) {
    auto s = brute_force_set(spec, 1);
    std::size_t missing = 0;
    s.for_each([&](std::span<const std::int64_t> e) {
      Key t(9);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          t[j * 3 + i] = e[i * 3 + j];
      if (!s.contains(t))
        ++missing;
    });
    CHECK(missing == 0);
  }
}

TEST_CASE("thread count does not change results") {
  BruteOptions one;
  BruteOptions many;
  many.threads = 7;
  CHECK(brute_force_count(SplitPolySpec(1, 2), 2, one).count ==
        brute_force_count(SplitPolySpec(1, 2), 2, many).count);
  CHECK(to_std_set(brute_force_set(SplitPolySpec(3, 0), 1, one)) ==
        to_std_set(brute_force_set(SplitPolySpec(3, 0), 1, many)));
  ParamOptions p1;
  ParamOptions p5;
  p5.threads = 5;
  CHECK(to_std_set(param_image(SplitPolySpec(1, 2), 2, p1)) ==
        to_std_set(param_image(SplitPolySpec(1, 2), 2, p5)));
}

TEST_CASE("work guard") {
  BruteOptions o;
  o.work_limit = 1000;
  CHECK_THROWS_AS(brute_force_count(SplitPolySpec(3, 0), 1, o), Error);
  o.force = true;
  CHECK(brute_force_count(SplitPolySpec(3, 0), 1, o).count > 0);
  CHECK(brute_work_estimate(3, 1) == 19683);
}

TEST_CASE("parametrized sweeps match the nested-loop reference") {
  ParamOptions opts;
  CHECK(to_std_set(param_image(SplitPolySpec(1, 2), 1, opts)) == reference_image(true, 1, 4));
  CHECK(to_std_set(param_image(SplitPolySpec(3, 0), 1, opts)) == reference_image(false, 1, 4));
  CHECK(to_std_set(param_image(SplitPolySpec(1, 2), 2, opts)) == reference_image(true, 2, 4));
  CHECK(param_count_mixed(1).count == reference_image(true, 1, 4).size());
  CHECK(param_count_unipotent(1).count == reference_image(false, 1, 4).size());

  ParamOptions crude;
  crude.b_mode = BRangeMode::crude;
  CHECK(to_std_set(param_image(SplitPolySpec(3, 0), 2, crude)) ==
        to_std_set(param_image(SplitPolySpec(3, 0), 2, opts)));

  for (const SplitPolySpec &spec : {SplitPolySpec(1, 2), SplitPolySpec(3, 0)}) {
    auto image = param_image(spec, 2, opts);
    std::size_t bad = 0;
    image.for_each([&](std::span<const std::int64_t> e) {
      IntegerMatrix m = IntegerMatrix::from_int64(3, e);
      if (det(m) != 1 || char_poly(m) != spec.poly() || sup_norm(m) > 2)
        ++bad;
    });
    CHECK(bad == 0);
  }

  Integer previous = 0;
  for (long h = 1; h <= 4; ++h) {
    Integer c = param_count_mixed(h).count;
    CHECK(c >= previous);
    previous = c;
  }
  previous = 0;
  for (long h = 1; h <= 4; ++h) {
    Integer c = param_count_unipotent(h).count;
    CHECK(c >= previous);
    previous = c;
  }
  CHECK_THROWS_AS(param_image(SplitPolySpec(2, 0), 1), Error);
  CHECK_THROWS_AS(param_count_mixed(0), Error);
}

TEST_CASE("block box counts") {
  CHECK(block_box_count(SplitPolySpec(3, 0), 1).count == 27);
  CHECK(block_box_count(SplitPolySpec(2, 2), 2).count == 15625);
  CHECK(block_box_count(SplitPolySpec(1, 2), 3).count == 343);
  Integer big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2'000'001, 28);
  CHECK(block_box_count(SplitPolySpec(6, 2), 1'000'000).count == big);

  for (const SplitPolySpec &spec : {SplitPolySpec(3, 0), SplitPolySpec(1, 2)}) {
    auto set = block_box_set(spec, 1);
    CHECK(set.size() == 27);
    std::size_t bad = 0;
    set.for_each([&](std::span<const std::int64_t> e) {
      IntegerMatrix m = IntegerMatrix::from_int64(3, e);
      if (det(m) != 1 || char_poly(m) != spec.poly())
        ++bad;
    });
    CHECK(bad == 0);
    CHECK(set.is_subset_of(brute_force_set(spec, 1)));
  }
  CHECK_THROWS_AS(block_box_count(SplitPolySpec(2, 1), 1), Error);
}

TEST_CASE("coverage audit") {
  CoverageReport r0 = coverage_audit(SplitPolySpec(1, 2), 0);
  CHECK(r0.coverage_ratio == 1.0);
  CHECK(r0.image_set_size == 0);

  double last = -1;
  for (long k : {1, 2, 4, 8}) {
    ParamOptions o;
    o.box_constant = k;
    CoverageReport r = coverage_audit(SplitPolySpec(3, 0), 1, o);
    CHECK(r.soundness);
    CHECK(r.invalid_image == 0);
    CHECK(r.coverage_ratio >= 0.0);
    CHECK(r.coverage_ratio <= 1.0);
    CHECK(r.coverage_ratio >= last);
    last = r.coverage_ratio;
  }

  ParamOptions up;
  up.upper_radius = 1;
  CoverageReport plain = coverage_audit(SplitPolySpec(1, 2), 2);
  CoverageReport with_upper = coverage_audit(SplitPolySpec(1, 2), 2, up);
  CHECK(with_upper.soundness);
  CHECK(with_upper.intersection_size >= plain.intersection_size);
}

TEST_CASE("jordan stratification") {
  StratifiedCount s = jordan_stratified_count(SplitPolySpec(3, 0), 1);
  Integer sum = 0;
  for (const auto &[type, count] : s.strata) {
    CHECK(count >= 0);
    int total = 0;
    for (std::size_t i = 0; i < type.plus.size(); ++i) {
      total += type.plus[i];
      if (i > 0)
        CHECK(type.plus[i] <= type.plus[i - 1]);
    }
    CHECK(total == 3);
    CHECK(type.minus.empty());
    sum += count;
  }
  CHECK(sum == s.total.count);
  CHECK(s.total.count == brute_force_count(SplitPolySpec(3, 0), 1).count);
  CHECK(s.strata.at(JordanType{{1, 1, 1}, {}}) == 1);

  // Oracle: N = A - I has rank 1 for type (2,1) and N^2 != 0 for type (3).
  auto set = brute_force_set(SplitPolySpec(3, 0), 1);
  Integer two_one = 0;
  Integer three = 0;
  set.for_each([&](std::span<const std::int64_t> e) {
    IntegerMatrix n = shift_diagonal(IntegerMatrix::from_int64(3, e), -1);
    if (!mat_mul(n, n).is_zero())
      ++three;
    else if (!n.is_zero())
      ++two_one;
  });
  CHECK(s.strata.at(JordanType{{2, 1}, {}}) == two_one);
  CHECK(s.strata.at(JordanType{{3}, {}}) == three);
}

TEST_CASE("norm comparison") {
  BruteOptions fro;
  fro.norm = Norm::frobenius;
  CHECK(brute_force_count(SplitPolySpec(2, 0), 1, fro).count == 0);
  Integer previous = 0;
  for (long h = 1; h <= 3; ++h) {
    NormComparison c = norm_comparison(SplitPolySpec(2, 0), h);
    CHECK(c.sandwich_holds);
    CHECK(c.frobenius.count == exhaustive_count2(h, true));
    CHECK(c.frobenius_scaled.count == exhaustive_count2(2 * h, true));
    CHECK(c.sup.count >= previous);
    previous = c.sup.count;
  }
}

TEST_CASE("growth exponent fit") {
  std::vector<CountRecord> recs;
  for (long h : {10, 20, 40, 80})
    recs.push_back(block_box_count(SplitPolySpec(1, 2), h));
  GrowthFit f = fit_exponent(recs);
  CHECK(f.slope == doctest::Approx(3.0).epsilon(0.02));
  CHECK(f.points.size() == 4);

  auto make = [](long h, long c) {
    CountRecord r;
    r.height = h;
    r.count = c;
    return r;
  };
  GrowthFit flat = fit_exponent({make(1, 7), make(2, 7), make(4, 7)});
  CHECK(flat.slope == doctest::Approx(0.0));
  GrowthFit linear = fit_exponent({make(3, 30), make(1, 10), make(2, 20)});
  CHECK(linear.slope == doctest::Approx(1.0));
  CHECK(linear.residual == doctest::Approx(0.0));

  try {
    fit_exponent({make(1, 1), make(2, 2)});
    FAIL("expected InsufficientPoints");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::InsufficientPoints);
  }
  CHECK_THROWS_AS(fit_exponent({make(1, 1), make(1, 2), make(2, 3)}), Error);
  CHECK_THROWS_AS(fit_exponent({make(1, 1), make(2, 0), make(3, 3)}), Error);
  auto other = make(4, 9);
  other.method = Method::block_box;
  CHECK_THROWS_AS(fit_exponent({make(1, 1), make(2, 2), other}), Error);
}

TEST_CASE("method and norm names") {
  CHECK(parse_method("brute") == Method::brute);
  CHECK(parse_norm("fro") == Norm::frobenius);
  CHECK(to_string(Method::param_mixed) == "param_mixed");
  CHECK_THROWS_AS(parse_method("nope"), Error);
}

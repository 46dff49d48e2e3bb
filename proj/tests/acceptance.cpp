// Acceptance checks, one line per criterion.
//
//   acceptance          run every criterion
//   acceptance 3 5      run only criteria 3 and 5
//
// Exit status is 0 only when every requested criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cli.hpp"
#include "splitcount/conj3.hpp"
#include "splitcount/counting.hpp"
#include "splitcount/density.hpp"
#include "splitcount/linalg.hpp"
#include "splitcount/normal_form.hpp"
#include "support.hpp"

using namespace splitcount;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string &what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void note(const std::string &s) { detail += (detail.empty() ? "" : "; ") + s; }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string fmt(double x, int digits = 4) {
  std::ostringstream os;
  os.precision(digits);
  os << std::fixed << x;
  return os.str();
}

Outcome closed_form_verification() {
  Outcome o;
  const auto start = Clock::now();
  conj3::VerifyOptions opts;
  opts.box = 3;
  opts.trials = 100'000;
  opts.range = 50;
  opts.seed = 0;
  conj3::VerifyReport r = conj3::verify_closed_forms(opts);
  const double t = seconds_since(start);
  o.require(r.mismatches == 0, std::to_string(r.mismatches) + " mismatches");
  // 7^6 box sextuples and 10^5 random ones, five checks each.
  o.require(r.checks == 5 * (117'649 + 100'000), "unexpected number of checks");
  o.require(t < 10.0, "runtime " + fmt(t) + " s");
  o.note(std::to_string(r.checks) + " checks, 0 mismatches, max entry " +
         r.max_entry.get_str() + ", " + fmt(t) + " s");
  return o;
}

Outcome brute_force_values() {
  Outcome o;
  const auto start = Clock::now();
  Integer n2 = brute_force_count(SplitPolySpec(2, 0), 1).count;
  o.require(n2 == 5, "n=2 H=1 count " + n2.get_str());
  Integer h1 = brute_force_count(SplitPolySpec(3, 0), 1).count;
  std::uint64_t h1_oracle = testsupport::nested_loop_count3(3, 0, 1);
  o.require(h1 >= 27, "n=3 H=1 below 27");
  o.require(h1 == h1_oracle, "n=3 H=1 disagrees with nested loops");
  Integer h2 = brute_force_count(SplitPolySpec(3, 0), 2).count;
  std::uint64_t h2_oracle = testsupport::nested_loop_count3(3, 0, 2);
  o.require(h2 == h2_oracle, "n=3 H=2 disagrees with nested loops");
  const double t = seconds_since(start);
  o.require(t < 60.0, "runtime " + fmt(t) + " s");
  o.note("N(2,H=1)=" + n2.get_str() + ", N(3,H=1)=" + h1.get_str() + ", N(3,H=2)=" +
         h2.get_str() + " (oracles " + std::to_string(h1_oracle) + ", " +
         std::to_string(h2_oracle) + "), " + fmt(t) + " s");
  return o;
}

Outcome set_level_soundness() {
  Outcome o;
  for (const SplitPolySpec &spec : {SplitPolySpec(1, 2), SplitPolySpec(3, 0)})
    for (long h : {1, 2}) {
      MatrixSet brute = brute_force_set(spec, h);
      MatrixSet image = param_image(spec, h);
      CoverageReport r = coverage_audit(spec, h);
      o.require(image.is_subset_of(brute),
                spec.to_string() + " H=" + std::to_string(h) + " image not in brute set");
      o.require(r.soundness && r.invalid_image == 0, "coverage report unsound");
      o.note(spec.to_string() + " H=" + std::to_string(h) + " coverage " +
             std::to_string(r.intersection_size) + "/" + std::to_string(r.brute_set_size) +
             " = " + fmt(r.coverage_ratio));
    }
  return o;
}

Outcome exponent_law() {
  Outcome o;
  const auto start = Clock::now();
  for (const SplitPolySpec &spec : {SplitPolySpec(3, 0), SplitPolySpec(4, 0)}) {
    std::vector<CountRecord> recs;
    for (long h : {10, 20, 40, 80})
      recs.push_back(block_box_count(spec, h));
    GrowthFit f = fit_exponent(recs);
    const double target = spec.n() * (spec.n() - 1) / 2.0;
    const std::string label = "n=" + std::to_string(spec.n()) + " slope " + fmt(f.slope);
    if (std::abs(f.slope - target) <= 0.05)
      o.note(label);
    else
      o.require(false, label + " not within 0.05 of " + fmt(target, 0));
  }
  const double t = seconds_since(start);
  o.require(t < 1.0, "runtime " + fmt(t) + " s");
  o.note(fmt(t) + " s");
  return o;
}

Outcome normal_form_roundtrip() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<long> entry(-3, 3);
  std::size_t failures = 0;
  std::size_t cases = 0;
  for (const SplitPolySpec &spec :
       {SplitPolySpec(3, 0), SplitPolySpec(1, 2), SplitPolySpec(4, 0), SplitPolySpec(2, 2)}) {
    const std::size_t n = static_cast<std::size_t>(spec.n());
    const std::size_t na = static_cast<std::size_t>(spec.a());
    const std::size_t nb = static_cast<std::size_t>(spec.b());
    for (int trial = 0; trial < 1000; ++trial) {
      IntegerMatrix core(n);
      for (std::size_t i = 0; i < n; ++i) {
        core(i, i) = i < na ? 1 : -1;
        for (std::size_t j = i + 1; j < n; ++j)
          core(i, j) = entry(rng);
      }
      auto g0 = testsupport::random_bounded_unimodular(n, rng, 2, static_cast<int>(2 * n));
      IntegerMatrix a = testsupport::naive_mul(testsupport::naive_mul(g0.g, core), g0.g_inv);
      ++cases;
      try {
        BlockNormalForm f = block_reduce(a, spec);
        IntegerMatrix g_inv = inverse_unimodular(f.g);
        IntegerMatrix assembled = f.assemble();
        bool ok = testsupport::laplace_det(f.g) == 1 &&
                  testsupport::naive_mul(testsupport::naive_mul(f.g, a), g_inv) == assembled &&
                  assembled.block(na, 0, nb, na).is_zero() &&
                  f.X.is_strictly_upper_triangular() && f.Y.is_strictly_upper_triangular() &&
                  testsupport::laplace_char_poly(assembled) == spec.poly().coeffs;
        if (!ok)
          ++failures;
      } catch (const std::exception &) {
        ++failures;
      }
    }
  }
  const double t = seconds_since(start);
  o.require(failures == 0, std::to_string(failures) + " failed roundtrips");
  o.require(t < 60.0, "runtime " + fmt(t) + " s");
  o.note(std::to_string(cases) + " roundtrips, " + std::to_string(failures) + " failures, " +
         fmt(t) + " s");
  return o;
}

Outcome jordan_stratification() {
  Outcome o;
  const SplitPolySpec spec(3, 0);
  StratifiedCount s = jordan_stratified_count(spec, 1);
  Integer total = brute_force_count(spec, 1).count;
  Integer sum = 0;
  for (const auto &[type, c] : s.strata)
    sum += c;
  o.require(sum == total, "strata do not sum to the brute total");

  std::map<JordanType, Integer> oracle;
  brute_force_set(spec, 1).for_each([&](std::span<const std::int64_t> e) {
    oracle[jordan_type(IntegerMatrix::from_int64(3, e), spec)] += 1;
  });
  o.require(oracle == s.strata, "strata differ from per-matrix jordan_type");
  const JordanType t3{{3}, {}}, t21{{2, 1}, {}}, t111{{1, 1, 1}, {}};
  o.require(s.strata.count(t111) && s.strata.at(t111) == 1, "(1,1,1) stratum is not 1");
  auto get = [&](const JordanType &t) {
    return s.strata.count(t) ? s.strata.at(t).get_str() : std::string("0");
  };
  o.note("total " + total.get_str() + " = (3):" + get(t3) + " + (2,1):" + get(t21) +
         " + (1,1,1):" + get(t111));
  return o;
}

Outcome residue_counts() {
  Outcome o;
  auto scan = [](long q) {
    long count = 0;
    for (long p = 0; p < q; ++p)
      for (long r = 0; r < q; ++r)
        for (long s = 0; s < q; ++s)
          for (long t = 0; t < q; ++t)
            if ((p + t) % q == 2 % q && ((p * t - r * s) % q + q) % q == 1 % q)
              ++count;
    return count;
  };
  ResidueCount k1 = residue_count(SplitPolySpec(2, 0), 3, 1);
  ResidueCount k2 = residue_count(SplitPolySpec(2, 0), 3, 2);
  o.require(k1.raw == 9, "k=1 raw " + k1.raw.get_str());
  o.require(k1.raw == scan(3), "k=1 disagrees with the 3^4 scan");
  o.require(k1.raw == 3 * 3, "k=1 disagrees with q^2");
  o.require(k2.raw == scan(9), "k=2 disagrees with the 9^4 scan");
  Rational e1(k1.raw, 3);
  e1.canonicalize();
  Rational e2(k2.raw, 9);
  e2.canonicalize();
  o.require(k1.normalized == e1 && k2.normalized == e2, "normalized values are not raw/p^k");
  o.note("k=1 raw " + k1.raw.get_str() + " normalized " + k1.normalized.get_str() +
         "; k=2 raw " + k2.raw.get_str() + " normalized " + k2.normalized.get_str());
  return o;
}

Outcome norm_sandwich() {
  Outcome o;
  for (long h : {1, 2, 3}) {
    NormComparison c = norm_comparison(SplitPolySpec(2, 0), h);
    o.require(c.sandwich_holds, "sandwich fails at H=" + std::to_string(h));
    o.note("H=" + std::to_string(h) + ": " + c.frobenius.count.get_str() + " <= " +
           c.sup.count.get_str() + " <= " + c.frobenius_scaled.count.get_str());
  }
  return o;
}

using json = nlohmann::ordered_json;

void strip_timing(json &j) {
  if (j.is_object()) {
    j.erase("run");
    j.erase("wall_seconds");
    for (auto &[k, v] : j.items())
      strip_timing(v);
  } else if (j.is_array()) {
    for (auto &v : j)
      strip_timing(v);
  }
}

std::string payload(std::vector<std::string> args, unsigned threads, int &rc) {
  args.insert(args.begin(), {"--threads", std::to_string(threads)});
  std::ostringstream out;
  std::ostringstream err;
  rc = cli::run(args, out, err);
  json j = json::parse(out.str(), nullptr, false);
  if (j.is_discarded())
    return "unparseable: " + err.str();
  strip_timing(j);
  return j.dump();
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> runs = {
      {"count", "--n", "2", "--split", "2,0", "--height", "1", "--method", "brute"},
      {"count", "--n", "3", "--poly", "(x-1)^3", "--height", "1,2", "--method", "brute"},
      {"count", "--n", "3", "--poly", "(x+1)^2(x-1)", "--height", "1,2", "--method", "param"},
      {"count", "--n", "3", "--poly", "(x-1)^3", "--height", "1,2", "--method", "param"},
      {"audit", "--poly", "(x+1)^2(x-1)", "--height", "1,2"},
      {"audit", "--poly", "(x-1)^3", "--height", "1,2"},
  };
  for (const auto &args : runs) {
    int rc1 = 0;
    int rc8 = 0;
    std::string one = payload(args, 1, rc1);
    std::string eight = payload(args, 8, rc8);
    o.require(rc1 == 0 && rc8 == 0, args[0] + " exited nonzero");
    o.require(one == eight, "payload differs for " + args[0] + " " + args.back());
  }
  o.note(std::to_string(runs.size()) + " payloads identical at 1 and 8 threads");
  return o;
}

struct Criterion {
  int id;
  const char *title;
  std::function<Outcome()> run;
};

} // namespace

int main(int argc, char **argv) {
  const std::vector<Criterion> all = {
      {1, "closed-form conjugation verification", closed_form_verification},
      {2, "brute-force oracle values", brute_force_values},
      {3, "set-level soundness of parametrized sweeps", set_level_soundness},
      {4, "growth exponent of block-box counts", exponent_law},
      {5, "block normal form roundtrips", normal_form_roundtrip},
      {6, "Jordan stratification", jordan_stratification},
      {7, "residue counts mod 3 and 9", residue_counts},
      {8, "sup/Frobenius norm sandwich", norm_sandwich},
      {9, "thread-count determinism of JSON payloads", determinism},
  };
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i)
    wanted.push_back(std::atoi(argv[i]));

  bool all_pass = true;
  for (const Criterion &c : all) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end())
      continue;
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception &e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    all_pass = all_pass && out.pass;
    std::cout << "criterion " << c.id << ": " << (out.pass ? "PASS" : "FAIL") << "  " << c.title
              << "  [" << out.detail << "]" << std::endl;
  }
  return all_pass ? 0 : 1;
}

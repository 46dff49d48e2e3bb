#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "splitcount/integer_matrix.hpp"
#include "splitcount/matrix_set.hpp"
#include "splitcount/normal_form.hpp"
#include "splitcount/poly.hpp"

namespace splitcount {

enum class Method { brute, param_mixed, param_unipotent, block_box };
enum class Norm { sup, frobenius };

std::string to_string(Method m);
std::string to_string(Norm n);
Method parse_method(const std::string &s);
Norm parse_norm(const std::string &s);

/// One count N_p(H) under a method and height norm. For the Frobenius norm
/// H is a radius: sum of squared entries <= H^2.
struct CountRecord {
  Method method = Method::brute;
  SplitPolySpec spec{1, 0};
  Norm norm = Norm::sup;
  std::int64_t height = 0;
  Integer count = 0;
  bool distinct = true;
  double wall_seconds = 0.0;
};

struct SweepOptions {
  unsigned threads = 1;
  Integer work_limit = 1'000'000'000;
  bool force = false;
};

struct BruteOptions : SweepOptions {
  Norm norm = Norm::sup;
  /// Trace and determinant pruning; off only to audit the pruned count.
  bool prune = true;
};

/// Predicted loop count for an unpruned brute-force box.
Integer brute_work_estimate(int n, std::int64_t height);

CountRecord brute_force_count(const SplitPolySpec &spec, std::int64_t height,
                              const BruteOptions &opts = {});

/// The brute-force solution set itself, for set-level audits.
MatrixSet brute_force_set(const SplitPolySpec &spec, std::int64_t height,
                          const BruteOptions &opts = {});

using Strata = std::map<JordanType, Integer>;

struct StratifiedCount {
  CountRecord total;
  Strata strata;
};

StratifiedCount jordan_stratified_count(const SplitPolySpec &spec,
                                        std::int64_t height,
                                        const BruteOptions &opts = {});

enum class BRangeMode { refined, crude };

struct ParamOptions : SweepOptions {
  std::int64_t box_constant = 4; // K
  BRangeMode b_mode = BRangeMode::refined;
  /// When > 0 also conjugate each lower-sweep matrix by U(x,y,z) with
  /// |x|,|y|,|z| <= upper_radius before the height filter.
  std::int64_t upper_radius = 0;
};

/// Predicted number of sextuples visited by a parametrized sweep.
Integer param_work_estimate(std::int64_t height, const ParamOptions &opts);

/// Distinct matrices L T(a,b,c) L^{-1} (or with U(a,b,c)) of sup height <= H.
MatrixSet param_image(const SplitPolySpec &spec, std::int64_t height,
                      const ParamOptions &opts = {});

CountRecord param_count_mixed(std::int64_t height, const ParamOptions &opts = {});
CountRecord param_count_unipotent(std::int64_t height,
                                  const ParamOptions &opts = {});

/// (2H+1)^{n(n-1)/2}; for n <= 3 and H <= 3 also cross-checked by explicit
/// enumeration of the upper block matrices.
CountRecord block_box_count(const SplitPolySpec &spec, std::int64_t height);

/// Distinct upper block matrices [[I+X, B],[0, -I+Y]] with entries in [-H, H].
MatrixSet block_box_set(const SplitPolySpec &spec, std::int64_t height);

struct CoverageReport {
  std::int64_t height = 0;
  std::size_t brute_set_size = 0;
  std::size_t image_set_size = 0;
  std::size_t intersection_size = 0;
  /// Image matrices whose determinant or characteristic polynomial is wrong.
  std::size_t invalid_image = 0;
  bool soundness = true;
  double coverage_ratio = 1.0;
};

CoverageReport coverage_audit(const SplitPolySpec &spec, std::int64_t height,
                              const ParamOptions &opts = {});

struct GrowthFit {
  std::vector<std::pair<std::int64_t, Integer>> points;
  double slope = 0.0;
  double intercept = 0.0;
  /// Sum of squared residuals in log space.
  double residual = 0.0;
};

/// Least squares on (log H, log count). Throws InsufficientPoints below 3
/// records and InvalidArgument on mixed series, repeated H or zero counts.
GrowthFit fit_exponent(const std::vector<CountRecord> &records);

struct NormComparison {
  CountRecord sup;
  CountRecord frobenius;        // radius H
  CountRecord frobenius_scaled; // radius n*H
  bool sandwich_holds = false;
};

NormComparison norm_comparison(const SplitPolySpec &spec, std::int64_t height,
                               const SweepOptions &opts = {});

} // namespace splitcount

#include "cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "splitcount/conj3.hpp"
#include "splitcount/counting.hpp"
#include "splitcount/density.hpp"
#include "splitcount/io.hpp"
#include "splitcount/linalg.hpp"
#include "splitcount/normal_form.hpp"

namespace splitcount::cli {

using json = nlohmann::ordered_json;

int exit_code(ErrorCode code) {
  switch (code) {
  case ErrorCode::CharPolyMismatch:
  case ErrorCode::RankError:
  case ErrorCode::InternalError:
  case ErrorCode::NotUnipotent:
    return 1;
  case ErrorCode::ParseError:
  case ErrorCode::OddB:
  case ErrorCode::DimensionMismatch:
  case ErrorCode::InsufficientPoints:
  case ErrorCode::InvalidArgument:
  case ErrorCode::NotPrime:
  case ErrorCode::WorkLimitExceeded:
  case ErrorCode::DependentInput:
    return 2;
  }
  return 1;
}

namespace {

struct Globals {
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string work_limit = "1000000000";
  std::string out;
  std::string format = "json";
  bool force = false;
};

struct SpecFlags {
  std::optional<int> n;
  std::string poly;
  std::string split;
};

void add_spec_flags(CLI::App *sub, SpecFlags &f) {
  sub->add_option("--n", f.n, "Matrix dimension")->check(CLI::Range(1, 8));
  sub->add_option("--poly", f.poly, "Characteristic polynomial, e.g. \"(x+1)^2(x-1)\"");
  sub->add_option("--split", f.split, "Multiplicities a,b of (x-1)^a (x+1)^b");
}

SplitPolySpec resolve_spec(const SpecFlags &f) {
  if (f.poly.empty() == f.split.empty())
    throw Error(ErrorCode::InvalidArgument, "give exactly one of --poly and --split");
  return f.poly.empty() ? io::parse_split(f.split, f.n) : io::parse_poly(f.poly, f.n);
}

Integer parse_work_limit(const std::string &s) {
  Integer w;
  if (s.empty() || w.set_str(s, 10) != 0 || w < 0)
    throw Error(ErrorCode::ParseError, "bad --work-limit '" + s + "'");
  return w;
}

std::vector<std::int64_t> parse_list(const std::string &text, const char *what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size())
        throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error &) {
      throw Error(ErrorCode::ParseError, std::string("bad ") + what + " '" + text + "'");
    }
  }
  if (out.empty())
    throw Error(ErrorCode::ParseError, std::string("empty ") + what);
  return out;
}

json matrix_json(const IntegerMatrix &m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json spec_json(const SplitPolySpec &s) {
  return {{"a", s.a()}, {"b", s.b()}, {"n", s.n()}, {"poly", s.to_string()}};
}

json record_json(const CountRecord &r) {
  return {{"method", to_string(r.method)},
          {"spec", spec_json(r.spec)},
          {"norm", to_string(r.norm)},
          {"height", r.height},
          {"count", r.count.get_str()},
          {"distinct", r.distinct},
          {"wall_seconds", r.wall_seconds}};
}

std::string rational_str(const Rational &q) { return q.get_str(); }

class Runner {
public:
  Runner(std::ostream &out, std::ostream &err) : out_(out), err_(err) {}

  int main(const std::vector<std::string> &args);

private:
  json envelope(const std::string &subcommand, json config) const {
    json c = {{"subcommand", subcommand},
              {"seed", g_.seed},
              {"work_limit", g_.work_limit},
              {"force", g_.force},
              {"format", g_.format},
              {"out", g_.out}};
    for (auto &[k, v] : config.items())
      c[k] = std::move(v);
    return {{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
            {"config", std::move(c)}};
  }

  void emit(json payload, double wall_seconds, const std::string &csv = {}) {
    payload["run"] = {{"threads", g_.threads}, {"wall_seconds", wall_seconds}};
    std::string text;
    if (g_.format == "csv") {
      if (csv.empty())
        throw Error(ErrorCode::InvalidArgument, "this subcommand has no CSV output");
      text = csv;
    } else {
      text = payload.dump(2) + "\n";
    }
    if (g_.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(g_.out, std::ios::binary);
    if (!f)
      throw Error(ErrorCode::InvalidArgument, "cannot write '" + g_.out + "'");
    f << text;
  }

  SweepOptions sweep() const {
    SweepOptions o;
    o.threads = g_.threads;
    o.work_limit = parse_work_limit(g_.work_limit);
    o.force = g_.force;
    return o;
  }

  int count();
  int reduce();
  int jordan();
  int density();
  int fit();
  int verify_conj();
  int audit();

  std::ostream &out_;
  std::ostream &err_;
  Globals g_;

  struct {
    SpecFlags spec;
    std::string heights;
    std::string method = "brute";
    std::string norm = "sup";
    bool stratify = false;
    std::int64_t k = 4;
    std::string b_range = "refined";
  } count_;
  struct {
    std::string matrix;
  } reduce_, jordan_;
  struct {
    SpecFlags spec;
    std::string primes;
    int k = 1;
    std::optional<int> k_max;
  } density_;
  struct {
    std::string input;
  } fit_;
  struct {
    std::uint64_t trials = 100'000;
    std::int64_t range = 50;
    std::int64_t box = 3;
  } verify_;
  struct {
    SpecFlags spec;
    std::string heights;
    std::int64_t k = 4;
    std::int64_t upper_radius = 0;
  } audit_;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

int Runner::count() {
  const auto start = Clock::now();
  const SplitPolySpec spec = resolve_spec(count_.spec);
  const auto heights = parse_list(count_.heights, "--height");
  const Norm norm = parse_norm(count_.norm);
  if (count_.method != "brute" && count_.method != "param" && count_.method != "block")
    throw Error(ErrorCode::InvalidArgument, "unknown --method '" + count_.method + "'");
  if (count_.b_range != "refined" && count_.b_range != "crude")
    throw Error(ErrorCode::InvalidArgument, "unknown --b-range '" + count_.b_range + "'");
  if (count_.method != "brute" && (norm != Norm::sup || count_.stratify))
    throw Error(ErrorCode::InvalidArgument,
                "--norm fro and --stratify need --method brute");

  json records = json::array();
  json strata = json::array();
  std::ostringstream csv;
  csv << "method,poly,norm,H,count,distinct,seconds\n";
  for (std::int64_t h : heights) {
    CountRecord rec;
    if (count_.method == "brute") {
      BruteOptions o;
      static_cast<SweepOptions &>(o) = sweep();
      o.norm = norm;
      if (count_.stratify) {
        StratifiedCount s = jordan_stratified_count(spec, h, o);
        rec = s.total;
        json row = {{"height", h}, {"strata", json::array()}};
        for (const auto &[type, c] : s.strata)
          row["strata"].push_back({{"jordan_plus", type.plus},
                                   {"jordan_minus", type.minus},
                                   {"count", c.get_str()}});
        strata.push_back(std::move(row));
      } else {
        rec = brute_force_count(spec, h, o);
      }
    } else if (count_.method == "param") {
      ParamOptions o;
      static_cast<SweepOptions &>(o) = sweep();
      o.box_constant = count_.k;
      o.b_mode = count_.b_range == "crude" ? BRangeMode::crude : BRangeMode::refined;
      if (spec == SplitPolySpec(1, 2))
        rec = param_count_mixed(h, o);
      else if (spec == SplitPolySpec(3, 0))
        rec = param_count_unipotent(h, o);
      else
        throw Error(ErrorCode::InvalidArgument,
                    "--method param supports only (x+1)^2(x-1) and (x-1)^3");
    } else {
      rec = block_box_count(spec, h);
    }
    records.push_back(record_json(rec));
    csv << to_string(rec.method) << ",\"" << spec.to_string() << "\"," << to_string(rec.norm)
        << ',' << rec.height << ',' << rec.count.get_str() << ','
        << (rec.distinct ? "true" : "false") << ',' << rec.wall_seconds << '\n';
  }

  json payload = envelope("count", {{"spec", spec_json(spec)},
                                    {"heights", heights},
                                    {"method", count_.method},
                                    {"norm", to_string(norm)},
                                    {"stratify", count_.stratify},
                                    {"K", count_.k},
                                    {"b_range", count_.b_range}});
  payload["records"] = std::move(records);
  if (count_.stratify)
    payload["strata"] = std::move(strata);
  emit(std::move(payload), since(start), csv.str());
  return 0;
}

SplitPolySpec infer_spec(const IntegerMatrix &a) {
  if (!a.is_square())
    throw Error(ErrorCode::DimensionMismatch, "matrix must be square");
  auto mult = split_multiplicities(char_poly(a));
  if (!mult)
    throw Error(ErrorCode::CharPolyMismatch, "characteristic polynomial " +
                                                 to_string(char_poly(a)) +
                                                 " is not (x-1)^a (x+1)^b");
  if (mult->second % 2 != 0 || det(a) != 1)
    throw Error(ErrorCode::CharPolyMismatch, "determinant is not 1");
  return SplitPolySpec(mult->first, mult->second);
}

int Runner::reduce() {
  const auto start = Clock::now();
  IntegerMatrix a = io::read_matrix_file(reduce_.matrix);
  SplitPolySpec spec = infer_spec(a);
  PrimarySplit split = primary_split(a, spec);
  NormalizedForm nf = normalize_jordan(block_reduce(a, spec));
  JordanType jt = jordan_type(nf.form);
  json payload = envelope("reduce", {{"matrix", reduce_.matrix}});
  payload["spec"] = spec_json(spec);
  payload["g"] = matrix_json(nf.form.g);
  payload["X"] = matrix_json(nf.form.X);
  payload["Y"] = matrix_json(nf.form.Y);
  payload["B"] = matrix_json(nf.form.B);
  payload["exact_jordan"] = nf.exact;
  payload["jordan_plus"] = jt.plus;
  payload["jordan_minus"] = jt.minus;
  payload["split_index"] = split.index.get_str();
  emit(std::move(payload), since(start));
  return 0;
}

int Runner::jordan() {
  const auto start = Clock::now();
  IntegerMatrix a = io::read_matrix_file(jordan_.matrix);
  SplitPolySpec spec = infer_spec(a);
  JordanType jt = jordan_type(a, spec);
  json payload = envelope("jordan", {{"matrix", jordan_.matrix}});
  payload["spec"] = spec_json(spec);
  payload["jordan_plus"] = jt.plus;
  payload["jordan_minus"] = jt.minus;
  emit(std::move(payload), since(start));
  return 0;
}

json residue_json(const ResidueCount &r) {
  return {{"n", r.n},
          {"a", r.spec.a()},
          {"b", r.spec.b()},
          {"p", r.p},
          {"k", r.k},
          {"raw", r.raw.get_str()},
          {"normalized_num", r.normalized.get_num().get_str()},
          {"normalized_den", r.normalized.get_den().get_str()}};
}

int Runner::density() {
  const auto start = Clock::now();
  const SplitPolySpec spec = resolve_spec(density_.spec);
  const auto primes = parse_list(density_.primes, "--prime");
  DensityOptions o;
  o.threads = g_.threads;
  o.work_limit = parse_work_limit(g_.work_limit);
  std::ostringstream csv;
  csv << "n,a,b,p,k,raw,normalized,delta\n";
  json payload = envelope("density", {{"spec", spec_json(spec)},
                                      {"primes", primes},
                                      {"k", density_.k},
                                      {"k_max", density_.k_max ? json(*density_.k_max)
                                                               : json(nullptr)}});
  if (!density_.k_max) {
    if (primes.size() != 1)
      throw Error(ErrorCode::InvalidArgument, "give one --prime, or --k-max for a table");
    ResidueCount r = residue_count(spec, primes[0], density_.k, o);
    const json fields = residue_json(r);
    for (auto &[key, v] : fields.items())
      payload[key] = v;
    csv << r.n << ',' << spec.a() << ',' << spec.b() << ',' << r.p << ',' << r.k << ','
        << r.raw.get_str() << ',' << rational_str(r.normalized) << ",\n";
  } else {
    json rows = json::array();
    for (const KappaRow &row : kappa_table(spec, primes, *density_.k_max, o)) {
      json j = residue_json(row.count);
      j["delta"] = row.delta ? json(rational_str(*row.delta)) : json(nullptr);
      j["p2_caveat"] = row.p2_caveat;
      rows.push_back(std::move(j));
      csv << row.count.n << ',' << spec.a() << ',' << spec.b() << ',' << row.count.p << ','
          << row.count.k << ',' << row.count.raw.get_str() << ','
          << rational_str(row.count.normalized) << ','
          << (row.delta ? rational_str(*row.delta) : "") << '\n';
    }
    payload["rows"] = std::move(rows);
  }
  emit(std::move(payload), since(start), csv.str());
  return 0;
}

CountRecord record_from_json(const json &j) {
  try {
    CountRecord r;
    r.method = parse_method(j.at("method").get<std::string>());
    r.spec = SplitPolySpec(j.at("spec").at("a").get<int>(), j.at("spec").at("b").get<int>());
    r.norm = parse_norm(j.at("norm").get<std::string>());
    r.height = j.at("height").get<std::int64_t>();
    const json &c = j.at("count");
    std::string text = c.is_string() ? c.get<std::string>() : c.dump();
    if (r.count.set_str(text, 10) != 0)
      throw Error(ErrorCode::ParseError, "bad count '" + text + "'");
    r.distinct = j.value("distinct", true);
    return r;
  } catch (const json::exception &e) {
    throw Error(ErrorCode::ParseError, std::string("bad count record: ") + e.what());
  }
}

int Runner::fit() {
  const auto start = Clock::now();
  std::ifstream f(fit_.input);
  if (!f)
    throw Error(ErrorCode::ParseError, "cannot open '" + fit_.input + "'");
  json doc;
  try {
    doc = json::parse(f);
  } catch (const json::exception &e) {
    throw Error(ErrorCode::ParseError, std::string("bad JSON: ") + e.what());
  }
  const json &list = doc.is_array() ? doc : doc.contains("records") ? doc["records"] : doc;
  if (!list.is_array())
    throw Error(ErrorCode::ParseError, "expected a records array");
  std::vector<CountRecord> recs;
  for (const json &j : list)
    recs.push_back(record_from_json(j));
  GrowthFit gf = fit_exponent(recs);
  json payload = envelope("fit", {{"input", fit_.input}});
  json points = json::array();
  for (const auto &[h, c] : gf.points)
    points.push_back({{"height", h}, {"count", c.get_str()}});
  payload["points"] = std::move(points);
  payload["slope"] = gf.slope;
  payload["intercept"] = gf.intercept;
  payload["residual"] = gf.residual;
  emit(std::move(payload), since(start));
  return 0;
}

int Runner::verify_conj() {
  const auto start = Clock::now();
  conj3::VerifyOptions o;
  o.box = verify_.box;
  o.trials = verify_.trials;
  o.range = verify_.range;
  o.seed = g_.seed;
  o.threads = g_.threads;
  conj3::VerifyReport r = conj3::verify_closed_forms(o);
  json payload = envelope("verify-conj", {{"trials", verify_.trials},
                                          {"range", verify_.range},
                                          {"box", verify_.box}});
  payload["trials"] = verify_.trials;
  payload["checks"] = r.checks;
  payload["mismatches"] = r.mismatches;
  payload["max_entry"] = r.max_entry.get_str();
  emit(std::move(payload), since(start));
  if (r.mismatches != 0) {
    err_ << "verify-conj: " << r.mismatches << " mismatches\n";
    return 1;
  }
  return 0;
}

int Runner::audit() {
  const auto start = Clock::now();
  const SplitPolySpec spec = resolve_spec(audit_.spec);
  const auto heights = parse_list(audit_.heights, "--height");
  ParamOptions o;
  static_cast<SweepOptions &>(o) = sweep();
  o.box_constant = audit_.k;
  o.upper_radius = audit_.upper_radius;
  json reports = json::array();
  std::ostringstream csv;
  csv << "poly,H,K,upper_radius,brute,image,intersection,invalid,soundness,coverage_ratio\n";
  bool sound = true;
  for (std::int64_t h : heights) {
    CoverageReport r = coverage_audit(spec, h, o);
    sound = sound && r.soundness;
    reports.push_back({{"height", r.height},
                       {"brute_set_size", r.brute_set_size},
                       {"image_set_size", r.image_set_size},
                       {"intersection_size", r.intersection_size},
                       {"invalid_image", r.invalid_image},
                       {"soundness", r.soundness},
                       {"coverage_ratio", r.coverage_ratio}});
    csv << '"' << spec.to_string() << "\"," << h << ',' << audit_.k << ','
        << audit_.upper_radius << ',' << r.brute_set_size << ',' << r.image_set_size << ','
        << r.intersection_size << ',' << r.invalid_image << ','
        << (r.soundness ? "true" : "false") << ',' << r.coverage_ratio << '\n';
  }
  json payload = envelope("audit", {{"spec", spec_json(spec)},
                                    {"heights", heights},
                                    {"K", audit_.k},
                                    {"upper_radius", audit_.upper_radius}});
  payload["reports"] = std::move(reports);
  emit(std::move(payload), since(start), csv.str());
  if (!sound) {
    err_ << "audit: parametrized image is not contained in the brute-force set\n";
    return 1;
  }
  return 0;
}

int Runner::main(const std::vector<std::string> &args) {
  CLI::App app{"Counting and normal forms for integer matrices with characteristic "
               "polynomial (x-1)^a (x+1)^b",
               kToolName};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", g_.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--threads", g_.threads, "Worker threads")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  app.add_option("--work-limit", g_.work_limit, "Largest predicted loop count")
      ->capture_default_str();
  app.add_option("--out", g_.out, "Output file (stdout when empty)");
  CLI::Option *format = app.add_option("--format", g_.format,
                                       "Output format (csv when --out ends in .csv)");
  format
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_flag("--force", g_.force, "Ignore the work limit");

  CLI::App *count = app.add_subcommand("count", "Count matrices of bounded height");
  add_spec_flags(count, count_.spec);
  count->add_option("--height", count_.heights, "Height H, or a comma list")->required();
  count->add_option("--method", count_.method, "brute, param or block")
      ->check(CLI::IsMember({"brute", "param", "block"}))
      ->capture_default_str();
  count->add_option("--norm", count_.norm, "sup or fro")
      ->check(CLI::IsMember({"sup", "fro", "frobenius"}))
      ->capture_default_str();
  count->add_flag("--stratify", count_.stratify, "Split brute counts by Jordan type");
  count->add_option("--K", count_.k, "Box constant of the parametrized sweep")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  count->add_option("--b-range", count_.b_range, "refined or crude b range")
      ->check(CLI::IsMember({"refined", "crude"}))
      ->capture_default_str();

  CLI::App *reduce = app.add_subcommand("reduce", "Reduce a matrix to upper block form");
  reduce->add_option("--matrix", reduce_.matrix, "Matrix file")->required();

  CLI::App *jordan = app.add_subcommand("jordan", "Jordan type of a matrix");
  jordan->add_option("--matrix", jordan_.matrix, "Matrix file")->required();

  CLI::App *density = app.add_subcommand("density", "Residue counts modulo p^k");
  add_spec_flags(density, density_.spec);
  density->add_option("--prime", density_.primes, "Prime p, or a comma list with --k-max")
      ->required();
  density->add_option("--k", density_.k, "Exponent k")->capture_default_str();
  density->add_option("--k-max", density_.k_max, "Tabulate k = 1..k-max");

  CLI::App *fit = app.add_subcommand("fit", "Log-log growth exponent of count records");
  fit->add_option("--input", fit_.input, "JSON file written by count")->required();

  CLI::App *verify = app.add_subcommand("verify-conj", "Check the 3x3 closed forms");
  verify->add_option("--trials", verify_.trials, "Random sextuples")->capture_default_str();
  verify->add_option("--range", verify_.range, "Random entries lie in [-range, range]")
      ->capture_default_str();
  verify->add_option("--box", verify_.box, "Exhaustive box [-box, box]^6")
      ->capture_default_str();

  CLI::App *audit = app.add_subcommand("audit", "Coverage of the parametrized sweeps");
  add_spec_flags(audit, audit_.spec);
  audit->add_option("--height", audit_.heights, "Height H, or a comma list")->required();
  audit->add_option("--K", audit_.k, "Box constant")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  audit->add_option("--upper-radius", audit_.upper_radius,
                    "Also conjugate by U(x,y,z) with |x|,|y|,|z| <= r")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (format->count() == 0 && g_.out.size() >= 4 &&
        g_.out.compare(g_.out.size() - 4, 4, ".csv") == 0)
      g_.format = "csv";
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e, out_, err_);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*count)
      return this->count();
    if (*reduce)
      return this->reduce();
    if (*jordan)
      return this->jordan();
    if (*density)
      return this->density();
    if (*fit)
      return this->fit();
    if (*verify)
      return verify_conj();
    if (*audit)
      return this->audit();
  } catch (const Error &e) {
    err_ << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception &e) {
    err_ << "InternalError: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Runner r(out, err);
  return r.main(args);
}

} // namespace splitcount::cli

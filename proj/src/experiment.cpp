#include "levelga/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "levelga/problems.hpp"
#include "levelga/samplers.hpp"
#include "levelga/stats.hpp"

namespace levelga {
namespace {

using nlohmann::json;

std::string trim_copy(std::string s) {
  const char* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value) {
  throw std::invalid_argument("bad value for config key '" + key + "': '" + value + "'");
}

long to_long(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(value, &pos);
  } catch (const std::exception&) {
    bad_value(key, value);
  }
  if (pos != value.size()) bad_value(key, value);
  return v;
}

double to_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    bad_value(key, value);
  }
  if (pos != value.size()) bad_value(key, value);
  return v;
}

std::uint64_t to_u64(const std::string& key, const std::string& value) {
  if (!value.empty() && value[0] == '-') bad_value(key, value);
  std::size_t pos = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(value, &pos);
  } catch (const std::exception&) {
    bad_value(key, value);
  }
  if (pos != value.size()) bad_value(key, value);
  return v;
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  bad_value(key, value);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

MutationSpec::Kind mutation_kind(const std::string& name) {
  if (name == "bitwise") return MutationSpec::Kind::bitwise;
  if (name == "point") return MutationSpec::Kind::point;
  throw std::invalid_argument("unknown mutation kind: " + name);
}

CrossoverSpec::Kind crossover_kind(const std::string& name) {
  if (name == "single-point" || name == "single_point") return CrossoverSpec::Kind::single_point;
  if (name == "pass-through" || name == "pass_through") return CrossoverSpec::Kind::pass_through;
  throw std::invalid_argument("unknown crossover kind: " + name);
}

SelectionSpec::Kind selection_kind(const std::string& name) {
  if (name == "tournament") return SelectionSpec::Kind::tournament;
  if (name == "mu-lambda" || name == "mu_lambda") return SelectionSpec::Kind::mu_lambda;
  if (name == "proportional") return SelectionSpec::Kind::proportional;
  throw std::invalid_argument("unknown selection kind: " + name);
}

// P(uniform genotype is feasible) for the set-cover family: the binomial tail
// P(#ones >= p). Exactly 1/2 is used when p = n/2 -- that is the certified
// floor the multistart bound quotes, and the true tail is never below it.
double balas_feasible_floor(int n, int p) {
  if (2 * p == n) return 0.5;
  long double tail = 0.0L;
  long double binom = 1.0L;  // C(n, j), exact in 64-bit mantissa for n <= 64
  for (int j = 0; j <= n; ++j) {
    if (j >= p) tail += binom;
    binom = binom * (n - j) / (j + 1);
  }
  return static_cast<double>(tail / std::ldexp(1.0L, n));
}

std::string sel_param_text(const ExperimentSpec& s) {
  switch (selection_kind(s.selection)) {
    case SelectionSpec::Kind::tournament: return std::to_string(s.k);
    case SelectionSpec::Kind::mu_lambda: return std::to_string(s.mu);
    case SelectionSpec::Kind::proportional: return fmt(s.alpha);
  }
  return "";
}

json spec_json(const ExperimentSpec& s) {
  return json{{"id", s.id},
              {"problem", s.problem},
              {"n", s.n},
              {"p", s.p},
              {"lambda", s.lambda},
              {"selection", s.selection},
              {"k", s.k},
              {"mu", s.mu},
              {"alpha", s.alpha},
              {"nu", s.nu},
              {"crossover", s.crossover},
              {"pc", s.pc},
              {"r", s.r},
              {"mutation", s.mutation},
              {"pm", s.pm},
              {"partition", s.partition},
              {"radius", s.radius},
              {"t_max", s.t_max},
              {"multistart", s.multistart},
              {"trials", s.trials},
              {"seed", s.seed},
              {"max_evaluations", s.max_evaluations},
              {"confidence", s.confidence}};
}

json conditions_json(const ConditionReport& c) {
  json per = json::array();
  for (const auto& l : c.per_level) {
    per.push_back(json{{"level", l.level},
                       {"value", l.level_value ? json(*l.level_value) : json()},
                       {"representatives", l.representatives},
                       {"trials_per_representative", l.trials_per_representative},
                       {"min_estimate", l.min_estimate},
                       {"radius", l.radius},
                       {"sampled", l.sampled}});
  }
  return json{{"m", c.m},
              {"s_star", c.s_star},
              {"s_star_estimated", c.s_star_estimated},
              {"s_star_radius", c.s_star_radius},
              {"p1", c.p1},
              {"p1_estimated", c.p1_estimated},
              {"beta0", c.beta0},
              {"beta0_certified", c.beta0_certified},
              {"epsilon", c.epsilon},
              {"epsilon_estimated", c.epsilon_estimated},
              {"epsilon_radius", c.epsilon_radius},
              {"lambda_required", c.lambda_required},
              {"lambda_configured", c.lambda_configured},
              {"lambda_ok", c.lambda_ok},
              {"success_floor", c.success_floor},
              {"per_level", per},
              {"notes", c.notes}};
}

json bound_json(const BoundReport& b) {
  return json{{"bound", b.bound},
              {"provenance", b.provenance},
              {"p1_used", b.p1_used},
              {"mean", b.mean},
              {"ci_lo", b.ci_lo},
              {"ci_hi", b.ci_hi},
              {"confidence", b.confidence},
              {"trials", b.trials},
              {"hits", b.hits},
              {"censored", b.censored},
              {"censored_rate", b.censored_rate},
              {"verdict", b.verdict},
              {"note", b.note}};
}

json result_json(const ExperimentResult& r) {
  return json{{"spec", spec_json(r.spec)},
              {"conditions", conditions_json(r.conditions)},
              {"bound", bound_json(r.bound)}};
}

}  // namespace

void apply_spec_key(ExperimentSpec& spec, const std::string& key, const std::string& value) {
  if (key == "id") {
    spec.id = value;
  } else if (key == "problem") {
    spec.problem = value;
  } else if (key == "n") {
    spec.n = static_cast<int>(to_long(key, value));
  } else if (key == "p") {
    spec.p = static_cast<int>(to_long(key, value));
  } else if (key == "lambda") {
    spec.lambda = value;
  } else if (key == "selection") {
    spec.selection = value;
  } else if (key == "k") {
    spec.k = static_cast<int>(to_long(key, value));
  } else if (key == "mu") {
    spec.mu = static_cast<int>(to_long(key, value));
  } else if (key == "alpha") {
    spec.alpha = to_double(key, value);
  } else if (key == "nu") {
    spec.nu = value;
  } else if (key == "crossover") {
    spec.crossover = value;
  } else if (key == "pc") {
    spec.pc = to_double(key, value);
  } else if (key == "r") {
    spec.r = static_cast<int>(to_long(key, value));
  } else if (key == "mutation") {
    spec.mutation = value;
  } else if (key == "pm") {
    spec.pm = to_double(key, value);
  } else if (key == "partition") {
    spec.partition = value;
  } else if (key == "radius") {
    spec.radius = static_cast<int>(to_long(key, value));
  } else if (key == "t_max") {
    spec.t_max = value;
  } else if (key == "multistart") {
    spec.multistart = to_bool(key, value);
  } else if (key == "trials") {
    spec.trials = to_long(key, value);
  } else if (key == "seed") {
    spec.seed = to_u64(key, value);
  } else if (key == "max_evaluations") {
    spec.max_evaluations = to_u64(key, value);
  } else if (key == "confidence") {
    spec.confidence = to_double(key, value);
  } else if (key == "threads") {
    spec.threads = static_cast<int>(to_long(key, value));
  } else if (key == "out_csv") {
    spec.out_csv = value;
  } else if (key == "out_json") {
    spec.out_json = value;
  } else {
    throw std::invalid_argument("unknown config key: " + key);
  }
}

ExperimentSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  ExperimentSpec spec;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim_copy(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key=value");
    apply_spec_key(spec, trim_copy(line.substr(0, eq)), trim_copy(line.substr(eq + 1)));
  }
  return spec;
}

ResolvedExperiment resolve_experiment(const ExperimentSpec& in) {
  ExperimentSpec spec = in;
  if (spec.trials < 1) throw std::invalid_argument("trials must be positive");
  if (!(spec.confidence > 0.0 && spec.confidence < 1.0))
    throw std::invalid_argument("confidence must lie strictly between 0 and 1");
  if (spec.r != 1 && spec.r != 2) throw std::invalid_argument("r must be 1 or 2");
  if (spec.threads < 0) throw std::invalid_argument("threads must be non-negative");
  if (spec.max_evaluations == 0) throw std::invalid_argument("max_evaluations must be positive");

  auto problem = make_problem(spec.problem, spec.n, spec.p > 0 ? spec.p : -1);
  const int n = problem->dimension();
  const auto* balas = dynamic_cast<const BalasSetCover*>(problem.get());
  spec.p = balas ? balas->cover_threshold() : 0;

  MutationSpec mutation{mutation_kind(spec.mutation), spec.pm < 0 ? 1.0 / n : spec.pm};
  mutation.validate();
  spec.pm = mutation.pm;

  CrossoverSpec crossover{crossover_kind(spec.crossover), spec.pc, spec.r};
  crossover.validate(n);

  std::string pkind = spec.partition;
  if (pkind == "auto") pkind = problem->unconstrained() ? "canonical" : "canonical-a0";
  LevelPartition partition = [&] {
    if (pkind == "canonical") return canonical_partition(problem, false);
    if (pkind == "canonical-a0") return canonical_partition(problem, true);
    if (pkind == "local-optima")
      return local_optima_partition(problem, NeighborhoodSpec{spec.radius}, n > 20);
    throw std::invalid_argument("unknown partition kind: " + spec.partition);
  }();
  spec.partition = pkind;
  const int m = partition.num_intermediate();

  const bool canonical_kind =
      partition.kind() == LevelPartition::Kind::canonical ||
      partition.kind() == LevelPartition::Kind::canonical_with_infeasible_a0;

  ConditionInputs inputs;

  // Upgrade-probability floor. On the unconstrained benchmarks one specific
  // gene flip advances the level while the remaining genes stay put, so the
  // floor is closed-form; anything else is estimated per level.
  if (canonical_kind && (spec.problem == "leadingones" || spec.problem == "onemax")) {
    const double s = mutation.kind == MutationSpec::Kind::bitwise
                         ? mutation.pm * std::pow(1.0 - mutation.pm, n - 1)
                         : mutation.pm / n;
    if (s <= 0.0) throw std::invalid_argument("mutation rate gives zero upgrade probability");
    inputs.s_star = s;
  } else if (partition.kind() == LevelPartition::Kind::local_optima &&
             (mutation.kind == MutationSpec::Kind::bitwise ||
              (mutation.kind == MutationSpec::Kind::point && spec.radius == 1))) {
    // Every non-optimum has an improving neighbor within the radius, so the
    // chance of landing exactly on it floors the upgrade probability. For
    // bitwise mutation that floor is the smallest transition probability over
    // distances 1..R (attained at R when pm <= 1/2, at 1 otherwise).
    const int worst_d = mutation.pm <= 0.5 ? spec.radius : 1;
    const double s = mutation.kind == MutationSpec::Kind::bitwise
                         ? mutation_transition_prob(n, mutation.pm, worst_d)
                         : mutation.pm / n;
    if (s <= 0.0) throw std::invalid_argument("mutation rate gives zero upgrade probability");
    inputs.s_star = s;
  } else {
    Rng rng(derive_seed(~spec.seed, 1));
    const auto est =
        estimate_s_star(partition, mutation, make_level_sampler(partition), 8, 4000, rng);
    if (!est.complete)
      throw std::invalid_argument("upgrade-probability estimation could not reach every level");
    if (est.s_star <= 0.0)
      throw std::invalid_argument(
          "estimated upgrade probability is zero; the mutation operator cannot advance levels");
    inputs.s_star = est.s_star;
    inputs.s_star_estimated = true;
    inputs.s_star_radius = est.radius;
    inputs.per_level = est.per_level;
  }

  // Crossover preservation floor. With two offspring kept, the no-crossover
  // event copies both parents, so 1-pc always works; the single-point
  // operator additionally preserves the best level on the leading-ones
  // benchmark half the time even when it always recombines. Everything else
  // is estimated on adversarially stratified parent pairs.
  if (crossover.kind == CrossoverSpec::Kind::pass_through && spec.r == 2) {
    inputs.epsilon = 1.0;
  } else if (crossover.kind == CrossoverSpec::Kind::single_point && spec.r == 2 && spec.pc < 1.0) {
    inputs.epsilon = 1.0 - spec.pc;
  } else if (crossover.kind == CrossoverSpec::Kind::single_point && spec.pc == 1.0 &&
             spec.problem == "leadingones" && canonical_kind) {
    inputs.epsilon = 0.5;
  } else {
    Rng rng(derive_seed(~spec.seed, 2));
    const auto est = estimate_crossover_epsilon(
        *problem, crossover, stratified_pair_sampler(partition, make_level_sampler(partition)),
        20000, rng);
    if (est.value <= 0.0)
      throw std::invalid_argument("estimated crossover preservation probability is zero");
    inputs.epsilon = est.value;
    inputs.epsilon_estimated = true;
    inputs.epsilon_radius = est.radius;
  }

  // Initial coverage: probability that one uniform genotype starts above the
  // infeasible level. The set-cover family has a closed-form tail; the
  // unconstrained benchmarks start covered with certainty.
  double p1_floor = 1.0;
  if (!problem->unconstrained()) {
    if (balas == nullptr)
      throw std::invalid_argument("no initial-coverage floor known for this problem");
    p1_floor = balas_feasible_floor(n, spec.p);
  }

  SelectionSpec selection;
  selection.kind = selection_kind(spec.selection);
  selection.mu = spec.mu;
  selection.alpha = spec.alpha;

  double beta0 = 0.0;
  switch (selection.kind) {
    case SelectionSpec::Kind::tournament:
      beta0 = beta0_tournament(spec.alpha);
      break;
    case SelectionSpec::Kind::mu_lambda:
      beta0 = beta0_mu_lambda(spec.mu);
      break;
    case SelectionSpec::Kind::proportional:
      beta0 = beta0_proportional(spec.alpha);
      break;
  }

  long lambda = 0;
  const std::string lambda_text = trim_copy(spec.lambda);
  if (lambda_text == "auto") {
    if (selection.kind == SelectionSpec::Kind::tournament && spec.k > 0)
      throw std::invalid_argument(
          "with lambda=auto, size the tournament through alpha (k = ceil(alpha*lambda))");
    lambda = lambda_lower_bound(m, *inputs.s_star, *inputs.epsilon, beta0);
    if (spec.r == 2 && lambda % 2 != 0) ++lambda;  // offspring come in pairs
  } else {
    lambda = to_long("lambda", lambda_text);
  }
  if (lambda < 2) throw std::invalid_argument("population size must be at least 2");
  if (lambda > std::numeric_limits<int>::max() / 2)
    throw std::invalid_argument("population size out of range");
  spec.lambda = std::to_string(lambda);

  if (selection.kind == SelectionSpec::Kind::tournament) {
    selection.k = spec.k > 0 ? spec.k : static_cast<int>(std::ceil(spec.alpha * double(lambda)));
    spec.k = selection.k;
  }
  selection.validate(static_cast<int>(lambda));

  FitnessMapping mapping;
  const std::string nu_text = trim_copy(spec.nu);
  if (!nu_text.empty()) {
    mapping.scaling = FitnessMapping::Scaling::power;
    if (nu_text == "auto") {
      const double threshold = nu_threshold(spec.alpha, double(lambda), problem->optimum());
      mapping.nu = threshold > 0.0 ? threshold * 1.01 : 1.0;
    } else {
      mapping.nu = to_double("nu", nu_text);
    }
    spec.nu = fmt(mapping.nu);
  }
  mapping.validate();

  inputs.p1 = 1.0 - std::pow(1.0 - p1_floor, double(lambda));

  std::optional<long> t_max;
  const std::string t_text = trim_copy(spec.t_max);
  if (t_text == "m") {
    t_max = m;
    spec.t_max = std::to_string(m);
  } else if (!t_text.empty()) {
    t_max = to_long("t_max", t_text);
  }

  GaConfig ga;
  ga.lambda = static_cast<int>(lambda);
  ga.selection = selection;
  ga.crossover = crossover;
  ga.mutation = mutation;
  ga.t_max = t_max;
  ga.multistart = spec.multistart;
  ga.max_evaluations = spec.max_evaluations;
  ga.seed = spec.seed;
  ga.validate(n);

  ConditionReport conditions =
      build_condition_report(partition, mapping, selection, crossover, ga.lambda, inputs);

  if (spec.id.empty()) {
    std::ostringstream os;
    os << spec.problem << "-n" << n << "-" << spec.selection << "-lam" << lambda
       << (spec.multistart ? "-ms" : "") << "-s" << spec.seed;
    spec.id = os.str();
  }

  return ResolvedExperiment{std::move(spec), std::move(problem), std::move(partition),
                            mapping,         ga,                 std::move(conditions),
                            p1_floor};
}

ExperimentResult run_experiment(const ExperimentSpec& in) {
  ResolvedExperiment rx = resolve_experiment(in);
  const long trials = rx.spec.trials;
  std::vector<RunRecord> records(static_cast<std::size_t>(trials));

  const auto body = [&](long i) {
    records[static_cast<std::size_t>(i)] = run_ga(
        rx.ga, rx.partition, rx.mapping, derive_seed(rx.spec.seed, static_cast<std::uint64_t>(i)));
  };
  long threads = rx.spec.threads > 0
                     ? rx.spec.threads
                     : static_cast<long>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min(threads, trials);
  if (threads <= 1) {
    for (long i = 0; i < trials; ++i) body(i);
  } else {
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (long t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (;;) {
          const long i = next.fetch_add(1, std::memory_order_relaxed);
          if (i >= trials) return;
          body(i);
        }
      });
    for (auto& th : pool) th.join();
  }

  BoundReport b;
  b.confidence = rx.spec.confidence;
  b.trials = trials;
  const auto add_note = [&b](const std::string& text) {
    if (!b.note.empty()) b.note += "; ";
    b.note += text;
  };
  const int m = rx.partition.num_intermediate();
  const double bound_scale = std::numbers::e * double(m) * double(rx.ga.lambda);
  if (rx.spec.multistart) {
    b.p1_used = rx.p1_floor;
    b.bound = bound_scale / rx.p1_floor;
    b.provenance = "multistart bound e*m*lambda/p1 for restarts cut off at t_max=m";
    if (!rx.ga.t_max || *rx.ga.t_max != m)
      add_note("bound assumes t_max=m; configured t_max differs, verdict is informational");
  } else {
    b.p1_used = 1.0;
    b.bound = bound_scale;
    b.provenance = "single-run bound e*m*lambda for an empty infeasible level";
    const bool a0_may_be_occupied =
        rx.partition.kind() == LevelPartition::Kind::canonical_with_infeasible_a0 ||
        !rx.partition.problem().unconstrained();
    if (a0_may_be_occupied)
      add_note(
          "bound assumes an empty infeasible level; this partition has one, "
          "verdict is informational");
  }

  std::vector<double> hit_times;
  hit_times.reserve(records.size());
  for (const auto& rec : records)
    if (rec.hit) hit_times.push_back(double(rec.evaluations));
  b.hits = static_cast<long>(hit_times.size());
  b.censored = trials - b.hits;
  b.censored_rate = double(b.censored) / double(trials);

  const MeanInterval ci = mean_confidence_interval(hit_times, rx.spec.confidence);
  if (ci.defined) {
    b.mean = ci.mean;
    b.ci_lo = ci.lo;
    b.ci_hi = ci.hi;
  }
  if (b.censored_rate > 0.01) {
    b.verdict = "inconclusive";
    add_note("more than 1% of trials were censored by the evaluation budget");
  } else if (b.hits < 2) {
    b.verdict = "inconclusive";
    add_note("too few hits for a confidence interval");
  } else if (b.mean <= b.bound) {
    b.verdict = "bound-respected";
  } else if (b.ci_lo > b.bound) {
    b.verdict = "violated";
  } else {
    b.verdict = "inconclusive";
    add_note("mean above the bound but confidence interval still covers it");
  }

  ExperimentResult result{rx.spec, rx.conditions, b, std::move(records)};
  if (!rx.spec.out_csv.empty()) {
    std::ofstream os(rx.spec.out_csv);
    if (!os) throw std::runtime_error("cannot write " + rx.spec.out_csv);
    write_csv(os, result);
  }
  if (!rx.spec.out_json.empty()) {
    std::ofstream os(rx.spec.out_json);
    if (!os) throw std::runtime_error("cannot write " + rx.spec.out_json);
    os << to_json_string(result) << '\n';
  }
  return result;
}

SweepResult verify_bounds(const ExperimentSpec& base, const std::vector<int>& sizes) {
  if (sizes.size() < 2) throw std::invalid_argument("a sweep needs at least two problem sizes");
  if (base.p > 0)
    throw std::invalid_argument("sweeps re-derive the cover threshold per size; leave p unset");
  SweepResult out;
  out.out_csv = base.out_csv;
  out.out_json = base.out_json;
  for (const int n : sizes) {
    ExperimentSpec spec = base;
    spec.n = n;
    spec.id.clear();
    spec.out_csv.clear();
    spec.out_json.clear();
    spec.seed = derive_seed(base.seed, static_cast<std::uint64_t>(n));
    out.sizes.push_back(run_experiment(spec));
  }

  std::vector<double> xs, ys;
  for (const auto& r : out.sizes)
    if (r.bound.hits >= 2 && r.bound.mean > 0.0) {
      xs.push_back(std::log(double(r.spec.n)));
      ys.push_back(std::log(r.bound.mean));
    }
  if (xs.size() >= 2) {
    const LineFit fit = fit_line(xs, ys);
    out.slope = fit.slope;
    out.intercept = fit.intercept;
    out.slope_defined = true;
  }

  if (!out.out_csv.empty()) {
    std::ofstream os(out.out_csv);
    if (!os) throw std::runtime_error("cannot write " + out.out_csv);
    bool header = true;
    for (const auto& r : out.sizes) {
      write_csv(os, r, header);
      header = false;
    }
  }
  if (!out.out_json.empty()) {
    std::ofstream os(out.out_json);
    if (!os) throw std::runtime_error("cannot write " + out.out_json);
    os << to_json_string(out) << '\n';
  }
  return out;
}

ConditionsResult check_conditions(const ExperimentSpec& in) {
  ResolvedExperiment rx = resolve_experiment(in);
  const int n = rx.problem->dimension();
  MonotonicityReport mono;
  if (n <= 16) {
    mono = check_monotonicity(rx.partition, MonotonicityMode::exhaustive);
  } else {
    Rng rng(derive_seed(~rx.spec.seed, 3));
    mono = check_monotonicity(rx.partition, MonotonicityMode::sampled, 20000, &rng);
  }
  return ConditionsResult{std::move(rx.spec), std::move(rx.conditions), std::move(mono)};
}

void write_csv(std::ostream& os, const ExperimentResult& result, bool header) {
  if (header)
    os << "experiment_id,problem,n,lambda,selection,sel_param,crossover,pc,r,mutation,pm,"
          "partition,trial,seed,hit,T,generations,restarts,best_objective\n";
  const ExperimentSpec& s = result.spec;
  const std::string sel_param = sel_param_text(s);
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    const RunRecord& rec = result.records[i];
    os << s.id << ',' << s.problem << ',' << s.n << ',' << s.lambda << ',' << s.selection << ','
       << sel_param << ',' << s.crossover << ',' << fmt(s.pc) << ',' << s.r << ',' << s.mutation
       << ',' << fmt(s.pm) << ',' << s.partition << ',' << i << ',' << rec.seed << ','
       << (rec.hit ? 1 : 0) << ',' << rec.evaluations << ',' << rec.generations << ','
       << rec.restarts << ',';
    if (rec.best_objective) os << *rec.best_objective;
    os << '\n';
  }
}

std::string to_json_string(const ExperimentResult& result) { return result_json(result).dump(2); }

std::string to_json_string(const SweepResult& result) {
  json sizes = json::array();
  for (const auto& r : result.sizes) sizes.push_back(result_json(r));
  json j{{"sizes", sizes}, {"slope_defined", result.slope_defined}};
  if (result.slope_defined) {
    j["slope"] = result.slope;
    j["intercept"] = result.intercept;
  }
  return j.dump(2);
}

std::string to_json_string(const ConditionsResult& result) {
  json mono{{"ok", result.monotonicity.ok}, {"exhaustive", result.monotonicity.exhaustive}};
  if (result.monotonicity.witness) {
    const auto& w = *result.monotonicity.witness;
    mono["witness"] = json{{"lower", w.lower.to_string()},
                           {"higher", w.higher.to_string()},
                           {"lower_level", w.lower_level}};
  }
  json j{{"spec", spec_json(result.spec)},
         {"conditions", conditions_json(result.report)},
         {"monotonicity", mono}};
  return j.dump(2);
}

}  // namespace levelga

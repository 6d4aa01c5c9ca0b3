#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "levelga/engine.hpp"

namespace levelga {

// One experiment, as read from a flat key=value config file or mirrored CLI
// flags. String fields keep their sentinels ("auto") until resolution.
struct ExperimentSpec {
  std::string id;  // derived from the parameters when left empty

  std::string problem = "leadingones";
  int n = 16;
  int p = 0;  // balas cover threshold; 0 means n/2

  std::string lambda = "auto";  // population size, or "auto" for the certified floor
  std::string selection = "tournament";
  int k = 0;  // tournament size; 0 means ceil(alpha*lambda)
  int mu = 1;
  double alpha = 1.0;
  std::string nu = "";  // power-scaling exponent, "auto", or empty for raw fitness

  std::string crossover = "single-point";
  double pc = 0.5;
  int r = 2;

  std::string mutation = "bitwise";
  double pm = -1.0;  // per-gene or per-application rate; negative means 1/n

  std::string partition = "auto";  // canonical | canonical-a0 | local-optima
  int radius = 1;                  // local-optima neighborhood radius

  std::string t_max = "";  // generations per run, "m" for one per level, empty for none
  bool multistart = false;

  long trials = 100;
  std::uint64_t seed = 1;
  std::uint64_t max_evaluations = 1'000'000'000;
  double confidence = 0.99;
  int threads = 0;  // 0 means hardware concurrency

  std::string out_csv;
  std::string out_json;
};

// Applies one config key; throws std::invalid_argument on unknown keys or
// unparsable values. The CLI flags and the config file share this routing.
void apply_spec_key(ExperimentSpec& spec, const std::string& key, const std::string& value);

// Flat key=value file, one experiment per file, '#' comments.
ExperimentSpec load_spec(const std::string& path);

struct ResolvedExperiment {
  ExperimentSpec spec;  // echo with sentinels replaced by resolved values
  std::shared_ptr<const Problem> problem;
  LevelPartition partition;
  FitnessMapping mapping;
  GaConfig ga;
  ConditionReport conditions;
  double p1_floor = 1.0;  // per-individual initial-coverage floor used in bounds
};

// Builds the problem, partition, operator configuration, and condition report
// for a spec, estimating what has no closed form (upgrade probabilities on
// set cover, crossover preservation outside the certified cases). Deviations
// from resolvable input are rejected with std::invalid_argument.
ResolvedExperiment resolve_experiment(const ExperimentSpec& spec);

struct BoundReport {
  double bound = 0.0;
  std::string provenance;
  double p1_used = 1.0;
  double mean = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  double confidence = 0.99;
  long trials = 0;
  long hits = 0;
  long censored = 0;
  double censored_rate = 0.0;
  std::string verdict;  // bound-respected | violated | inconclusive
  std::string note;
};

struct ExperimentResult {
  ExperimentSpec spec;
  ConditionReport conditions;
  BoundReport bound;
  std::vector<RunRecord> records;  // by trial index
};

// Runs the trials (in parallel when configured; trial i always uses the
// stream derived from the master seed and i, so results do not depend on
// scheduling), compares the mean hitting time against the applicable bound,
// and writes the CSV/JSON outputs when paths are set.
ExperimentResult run_experiment(const ExperimentSpec& spec);

struct SweepResult {
  std::vector<ExperimentResult> sizes;
  double slope = 0.0;      // log-log slope of mean hitting time against n
  double intercept = 0.0;
  bool slope_defined = false;
  std::string out_csv;
  std::string out_json;
};

// Same experiment across problem sizes; needs at least two.
SweepResult verify_bounds(const ExperimentSpec& base, const std::vector<int>& sizes);

struct ConditionsResult {
  ExperimentSpec spec;
  ConditionReport report;
  MonotonicityReport monotonicity;
};

ConditionsResult check_conditions(const ExperimentSpec& spec);

// Per-trial rows under the fixed header
// experiment_id,problem,n,lambda,selection,sel_param,crossover,pc,r,mutation,
// pm,partition,trial,seed,hit,T,generations,restarts,best_objective.
void write_csv(std::ostream& os, const ExperimentResult& result, bool header = true);

std::string to_json_string(const ExperimentResult& result);
std::string to_json_string(const SweepResult& result);
std::string to_json_string(const ConditionsResult& result);

}  // namespace levelga

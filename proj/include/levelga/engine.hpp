#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "levelga/crossover.hpp"
#include "levelga/levels.hpp"
#include "levelga/mutation.hpp"
#include "levelga/population.hpp"
#include "levelga/problem.hpp"
#include "levelga/selection.hpp"

namespace levelga {

// Non-elitist generational GA. Every member of generation t+1 is the output
// of mutate(crossover(select, select)); nothing is copied through unchanged,
// so the only way quality persists is through the variation pipeline itself.
struct GaConfig {
  int lambda = 2;
  SelectionSpec selection;
  CrossoverSpec crossover;  // arity 2 pairs offspring, arity 1 keeps firsts
  MutationSpec mutation;
  // Generations per run. A run that exhausts t_max either stops (single run)
  // or reinitializes (multistart).
  std::optional<long> t_max;
  bool multistart = false;
  std::uint64_t max_evaluations = 1'000'000'000;
  std::uint64_t seed = 0;

  void validate(int n) const;
};

struct RunRecord {
  bool hit = false;
  // Evaluations consumed; on a hit this is the index of the hitting
  // evaluation. Counts everything since the start of the trial, restarts
  // included.
  std::uint64_t evaluations = 0;
  // Generation index within the run that stopped (0 = initial population).
  long generations = 0;
  // Completed reinitializations before the final run.
  long restarts = 0;
  std::optional<std::int64_t> best_objective;  // best feasible score seen
  std::optional<Bitstring> best;               // earliest genotype attaining it
  std::optional<Bitstring> hit_genotype;
  std::uint64_t seed = 0;
};

// Earliest genotype attaining the best feasible objective of the trial.
const Bitstring& best_of_run(const RunRecord& record);

using TargetPredicate = std::function<bool(const Bitstring&, const Evaluation&)>;

// Optional replacements for pipeline stages. Defaults: uniform random
// initialization and the configured mutation operator. on_evaluation fires
// after every counted evaluation with the running count and the generation
// the genotype belongs to.
struct RunHooks {
  std::function<Bitstring(int n, Rng&)> initializer;
  std::function<Bitstring(const Bitstring&, Rng&)> mutator;
  std::function<void(const Bitstring&, const Evaluation&, std::uint64_t, long)> on_evaluation;
};

// Runs until the first evaluated genotype satisfies the target, the per-run
// generation cutoff expires (restarting first when multistart is set), or the
// evaluation budget runs out. The seed alone determines the trajectory;
// restart r draws its stream from derive_seed(seed, r).
RunRecord run_ga(const GaConfig& config, const Problem& problem, const FitnessMapping& mapping,
                 const TargetPredicate& target, std::uint64_t seed, const RunHooks& hooks = {});

// Same, with the target taken from a level partition.
RunRecord run_ga(const GaConfig& config, const LevelPartition& partition,
                 const FitnessMapping& mapping, std::uint64_t seed, const RunHooks& hooks = {});

// Multistart wrapper; rejects configs without multistart and t_max.
RunRecord run_multistart(const GaConfig& config, const Problem& problem,
                         const FitnessMapping& mapping, const TargetPredicate& target,
                         std::uint64_t seed, const RunHooks& hooks = {});

}  // namespace levelga

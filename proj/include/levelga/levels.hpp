#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "levelga/localsearch.hpp"
#include "levelga/problem.hpp"
#include "levelga/rng.hpp"

namespace levelga {

struct MutationSpec;
struct SelectionSpec;
struct CrossoverSpec;

// Ordered partition A_0, ..., A_{m+1} of the genotype space. A_0 holds the
// infeasible genotypes (possibly empty), A_1..A_m are the intermediate levels
// in increasing order of quality, and A_{m+1} is the target. H_j denotes the
// union of levels j and above, so a mutation "upgrades" from A_j when it
// lands in H_{j+1}.
class LevelPartition {
 public:
  enum class Kind { canonical, canonical_with_infeasible_a0, local_optima, custom };

  using Membership = std::function<int(const Bitstring&, const Evaluation&)>;

  int num_intermediate() const { return m_; }
  int target_level() const { return m_ + 1; }
  Kind kind() const { return kind_; }
  const Problem& problem() const { return *problem_; }
  const std::shared_ptr<const Problem>& problem_ptr() const { return problem_; }

  int level_of(const Bitstring& x) const { return level_of(x, problem_->evaluate_raw(x)); }
  int level_of(const Bitstring& x, const Evaluation& e) const;
  bool in_target(const Bitstring& x, const Evaluation& e) const;

  // Objective value shared by every member of intermediate level j, when the
  // partition groups by value (canonical and local-optima kinds).
  std::optional<std::int64_t> level_value(int j) const;

  // Escape hatch for nonstandard partitions (tests, user-defined targets).
  // The membership function must map every genotype into [0, m+1].
  static LevelPartition from_membership(std::shared_ptr<const Problem> problem, int m,
                                        Membership membership);

  friend LevelPartition canonical_partition(std::shared_ptr<const Problem> problem,
                                            bool include_infeasible_a0,
                                            std::optional<std::int64_t> target_min_value);
  friend LevelPartition local_optima_partition(std::shared_ptr<const Problem> problem,
                                               const NeighborhoodSpec& neighborhood, bool lazy);

 private:
  LevelPartition() = default;

  bool is_local_opt(const Bitstring& x) const;

  Kind kind_ = Kind::custom;
  std::shared_ptr<const Problem> problem_;
  int m_ = 0;
  std::vector<std::int64_t> values_;  // objective value of A_j at index j-1
  std::int64_t target_min_ = 0;       // canonical kinds: target is F >= target_min_
  NeighborhoodSpec neighborhood_{};   // local-optima kind
  bool lazy_ = false;
  std::shared_ptr<const std::vector<bool>> lo_mask_;  // eager local-optima table
  Membership custom_;
};

// Levels grouped by objective value: A_j holds the j-th smallest feasible
// value below the target threshold, which defaults to the optimum. With
// include_infeasible_a0 the infeasible set forms A_0; without it the problem
// must be unconstrained. Rejects problems whose value range is unknown and
// partitions with no intermediate level.
LevelPartition canonical_partition(std::shared_ptr<const Problem> problem,
                                   bool include_infeasible_a0,
                                   std::optional<std::int64_t> target_min_value = std::nullopt);

// Target A_{m+1} = local optima of the given neighborhood; the remaining
// feasible genotypes are grouped by objective value. Eager mode (lazy=false)
// tabulates local optimality over the whole cube and requires n <= 20; lazy
// mode decides it on demand and conservatively counts one level per feasible
// objective value.
LevelPartition local_optima_partition(std::shared_ptr<const Problem> problem,
                                      const NeighborhoodSpec& neighborhood, bool lazy = false);

// Smallest integer population size satisfying the level-based runtime
// guarantee, ceil(2*(1 + ln m) / (s * eps * beta0 * (2 - beta0))).
long lambda_lower_bound(int m, double s_star, double epsilon, double beta0);

struct LevelUpgradeEstimate {
  int level = 0;
  std::optional<std::int64_t> level_value;
  int representatives = 0;
  long trials_per_representative = 0;
  double min_estimate = 0.0;  // smallest per-representative upgrade frequency
  double radius = 0.0;        // 99% binomial radius for that frequency
  bool sampled = false;
};

struct SStarEstimate {
  std::vector<LevelUpgradeEstimate> per_level;
  double s_star = 0.0;  // minimum over sampled levels
  double radius = 0.0;
  std::vector<int> skipped_levels;
  bool complete = false;  // true when every intermediate level was sampled
};

// Produces a genotype of the requested intermediate level, or nullopt when it
// cannot (empty or practically unreachable level).
using LevelSampler = std::function<std::optional<Bitstring>(int level, Rng&)>;

// Worst-case upgrade probability is a minimum over each level's members, so
// the estimator samples representatives per level, estimates each one's
// upgrade probability by repeated mutation, and keeps the smallest. Levels
// the sampler cannot populate are flagged and excluded.
SStarEstimate estimate_s_star(const LevelPartition& partition, const MutationSpec& mutation,
                              const LevelSampler& sampler, int representatives_per_level,
                              long trials_per_representative, Rng& rng);

struct MonotonicityWitness {
  Bitstring lower;   // member of the lower level
  Bitstring higher;  // member of the higher level with fitness <= lower's
  int lower_level = 0;
};

struct MonotonicityReport {
  bool ok = true;
  std::optional<MonotonicityWitness> witness;
  bool exhaustive = false;
};

enum class MonotonicityMode { exhaustive, sampled };

// Checks that fitness strictly separates consecutive intermediate levels:
// members of A_{j-1} score strictly below members of A_j for j = 2..m.
// Exhaustive mode enumerates the cube (n <= 16); sampled mode can only
// refute, never certify.
MonotonicityReport check_monotonicity(const LevelPartition& partition, MonotonicityMode mode,
                                      long samples = 0, Rng* rng = nullptr);

struct ConditionInputs {
  std::optional<double> s_star;
  bool s_star_estimated = false;
  double s_star_radius = 0.0;
  std::optional<double> p1;
  bool p1_estimated = false;
  std::optional<double> epsilon;
  bool epsilon_estimated = false;
  double epsilon_radius = 0.0;
  std::vector<LevelUpgradeEstimate> per_level;
};

// Everything the runtime guarantee needs, gathered in one place: per-level
// upgrade probability floor, initial-coverage probability, selective pressure
// floor of the configured selection, crossover preservation probability, the
// implied population size floor, and whether the configured lambda clears it.
struct ConditionReport {
  int m = 0;
  double s_star = 0.0;
  bool s_star_estimated = false;
  double s_star_radius = 0.0;
  double p1 = 0.0;
  bool p1_estimated = false;
  double beta0 = 0.0;
  bool beta0_certified = false;  // false when the selection config misses its hypothesis
  double epsilon = 0.0;
  bool epsilon_estimated = false;
  double epsilon_radius = 0.0;
  long lambda_required = 0;
  int lambda_configured = 0;
  bool lambda_ok = false;
  double success_floor = 0.0;  // p1/e within the first m+1 generations
  std::vector<LevelUpgradeEstimate> per_level;
  std::vector<std::string> notes;
};

// Rejects inputs with missing estimates, naming the gap.
ConditionReport build_condition_report(const LevelPartition& partition,
                                       const FitnessMapping& mapping,
                                       const SelectionSpec& selection,
                                       const CrossoverSpec& crossover, int lambda,
                                       const ConditionInputs& inputs);

}  // namespace levelga

#include "levelga/levels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "levelga/crossover.hpp"
#include "levelga/mutation.hpp"
#include "levelga/selection.hpp"
#include "levelga/stats.hpp"

namespace levelga {

namespace {

// Index of `value` within the sorted distinct list, or -1.
int value_index(const std::vector<std::int64_t>& values, std::int64_t value) {
  const auto it = std::lower_bound(values.begin(), values.end(), value);
  if (it == values.end() || *it != value) return -1;
  return static_cast<int>(it - values.begin());
}

}  // namespace

bool LevelPartition::is_local_opt(const Bitstring& x) const {
  if (lo_mask_) return (*lo_mask_)[x.as_index()];
  return is_local_optimum(*problem_, x, neighborhood_);
}

int LevelPartition::level_of(const Bitstring& x, const Evaluation& e) const {
  if (custom_) return custom_(x, e);
  if (!e.feasible) return 0;
  switch (kind_) {
    case Kind::canonical:
    case Kind::canonical_with_infeasible_a0: {
      if (e.objective >= target_min_) return m_ + 1;
      const int i = value_index(values_, e.objective);
      if (i < 0) throw std::logic_error("LevelPartition: objective value outside declared range");
      return i + 1;
    }
    case Kind::local_optima: {
      if (is_local_opt(x)) return m_ + 1;
      const int i = value_index(values_, e.objective);
      if (i < 0) throw std::logic_error("LevelPartition: objective value outside declared range");
      return i + 1;
    }
    case Kind::custom:
      break;
  }
  throw std::logic_error("LevelPartition: uninitialized");
}

bool LevelPartition::in_target(const Bitstring& x, const Evaluation& e) const {
  if (custom_) return custom_(x, e) == m_ + 1;
  if (!e.feasible) return false;
  if (kind_ == Kind::local_optima) return is_local_opt(x);
  return e.objective >= target_min_;
}

std::optional<std::int64_t> LevelPartition::level_value(int j) const {
  if (j < 1 || j > m_ || values_.empty()) return std::nullopt;
  return values_[j - 1];
}

LevelPartition LevelPartition::from_membership(std::shared_ptr<const Problem> problem, int m,
                                               Membership membership) {
  if (!problem) throw std::invalid_argument("LevelPartition: null problem");
  if (m < 1) throw std::invalid_argument("LevelPartition: need m >= 1");
  if (!membership) throw std::invalid_argument("LevelPartition: null membership");
  LevelPartition p;
  p.kind_ = Kind::custom;
  p.problem_ = std::move(problem);
  p.m_ = m;
  p.custom_ = std::move(membership);
  return p;
}

LevelPartition canonical_partition(std::shared_ptr<const Problem> problem,
                                   bool include_infeasible_a0,
                                   std::optional<std::int64_t> target_min_value) {
  if (!problem) throw std::invalid_argument("canonical_partition: null problem");
  if (!include_infeasible_a0 && !problem->unconstrained())
    throw std::invalid_argument(
        "canonical_partition: constrained problem needs the infeasible level");
  std::vector<std::int64_t> values = problem->feasible_values();
  if (values.empty())
    throw std::invalid_argument("canonical_partition: feasible value range unknown for " +
                                problem->name());
  const std::int64_t target_min = target_min_value.value_or(problem->optimum());
  if (target_min > problem->optimum())
    throw std::invalid_argument("canonical_partition: empty target level");
  std::vector<std::int64_t> below;
  for (auto v : values)
    if (v < target_min) below.push_back(v);
  if (below.empty())
    throw std::invalid_argument("canonical_partition: degenerate partition without "
                                "intermediate levels");
  LevelPartition p;
  p.kind_ = include_infeasible_a0 ? LevelPartition::Kind::canonical_with_infeasible_a0
                                  : LevelPartition::Kind::canonical;
  p.problem_ = std::move(problem);
  p.m_ = static_cast<int>(below.size());
  p.values_ = std::move(below);
  p.target_min_ = target_min;
  return p;
}

LevelPartition local_optima_partition(std::shared_ptr<const Problem> problem,
                                      const NeighborhoodSpec& neighborhood, bool lazy) {
  if (!problem) throw std::invalid_argument("local_optima_partition: null problem");
  const int n = problem->dimension();
  neighborhood.validate(n);
  LevelPartition p;
  p.kind_ = LevelPartition::Kind::local_optima;
  p.neighborhood_ = neighborhood;
  p.lazy_ = lazy;
  if (lazy) {
    std::vector<std::int64_t> values = problem->feasible_values();
    if (values.empty())
      throw std::invalid_argument("local_optima_partition: feasible value range unknown for " +
                                  problem->name());
    // Without enumerating the cube we cannot tell which values survive off
    // the local-optima set, so every feasible value counts one level. That
    // only overstates m, which is the safe direction for runtime bounds.
    p.m_ = static_cast<int>(values.size());
    p.values_ = std::move(values);
    p.problem_ = std::move(problem);
    return p;
  }
  if (n > 20)
    throw std::invalid_argument(
        "local_optima_partition: eager enumeration limited to n <= 20, use lazy mode");
  const std::uint64_t cube = 1ULL << n;
  auto mask = std::make_shared<std::vector<bool>>(cube, false);
  std::vector<std::int64_t> values;
  for (std::uint64_t i = 0; i < cube; ++i) {
    const Bitstring x = Bitstring::from_index(n, i);
    if (!problem->is_feasible(x)) continue;
    if (is_local_optimum(*problem, x, neighborhood)) {
      (*mask)[i] = true;
    } else {
      values.push_back(problem->objective(x));
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.empty())
    throw std::invalid_argument("local_optima_partition: degenerate partition without "
                                "intermediate levels");
  p.m_ = static_cast<int>(values.size());
  p.values_ = std::move(values);
  p.lo_mask_ = std::move(mask);
  p.problem_ = std::move(problem);
  return p;
}

long lambda_lower_bound(int m, double s_star, double epsilon, double beta0) {
  if (m < 1) throw std::invalid_argument("lambda_lower_bound: m < 1");
  if (!(s_star > 0.0 && s_star <= 1.0))
    throw std::invalid_argument("lambda_lower_bound: s_star outside (0,1]");
  if (!(epsilon > 0.0 && epsilon <= 1.0))
    throw std::invalid_argument("lambda_lower_bound: epsilon outside (0,1]");
  if (!(beta0 > 0.0 && beta0 <= 1.0))
    throw std::invalid_argument("lambda_lower_bound: beta0 outside (0,1]");
  const double raw =
      2.0 * (1.0 + std::log(static_cast<double>(m))) / (s_star * epsilon * beta0 * (2.0 - beta0));
  return static_cast<long>(std::ceil(raw));
}

SStarEstimate estimate_s_star(const LevelPartition& partition, const MutationSpec& mutation,
                              const LevelSampler& sampler, int representatives_per_level,
                              long trials_per_representative, Rng& rng) {
  if (representatives_per_level < 1)
    throw std::invalid_argument("estimate_s_star: representatives_per_level < 1");
  if (trials_per_representative < 1)
    throw std::invalid_argument("estimate_s_star: trials_per_representative < 1");
  const Problem& problem = partition.problem();
  SStarEstimate out;
  out.s_star = 1.0;
  out.complete = true;
  for (int j = 1; j <= partition.num_intermediate(); ++j) {
    LevelUpgradeEstimate lvl;
    lvl.level = j;
    lvl.level_value = partition.level_value(j);
    lvl.trials_per_representative = trials_per_representative;
    double min_phat = 1.0;
    for (int r = 0; r < representatives_per_level; ++r) {
      const auto x = sampler(j, rng);
      if (!x) break;
      if (partition.level_of(*x) != j)
        throw std::invalid_argument("estimate_s_star: sampler produced wrong level");
      long up = 0;
      for (long t = 0; t < trials_per_representative; ++t) {
        const Bitstring y = mutate(*x, mutation, rng);
        if (partition.level_of(y, problem.evaluate_raw(y)) >= j + 1) ++up;
      }
      const double phat = static_cast<double>(up) / static_cast<double>(trials_per_representative);
      min_phat = std::min(min_phat, phat);
      ++lvl.representatives;
    }
    if (lvl.representatives == 0) {
      lvl.sampled = false;
      out.skipped_levels.push_back(j);
      out.complete = false;
    } else {
      lvl.sampled = true;
      lvl.min_estimate = min_phat;
      lvl.radius = binomial_confidence_radius(min_phat, trials_per_representative, 0.99);
      if (min_phat <= out.s_star) {
        out.s_star = min_phat;
        out.radius = lvl.radius;
      }
    }
    out.per_level.push_back(std::move(lvl));
  }
  bool any = false;
  for (const auto& lvl : out.per_level) any = any || lvl.sampled;
  if (!any) throw std::invalid_argument("estimate_s_star: no level could be sampled");
  return out;
}

MonotonicityReport check_monotonicity(const LevelPartition& partition, MonotonicityMode mode,
                                      long samples, Rng* rng) {
  const Problem& problem = partition.problem();
  const int n = problem.dimension();
  const int m = partition.num_intermediate();
  struct Extreme {
    bool seen = false;
    std::int64_t min_key = 0, max_key = 0;
    std::optional<Bitstring> min_x, max_x;
  };
  std::vector<Extreme> ext(m + 1);  // index by level, 1..m used
  auto account = [&](const Bitstring& x) {
    const Evaluation e = problem.evaluate_raw(x);
    const int lvl = partition.level_of(x, e);
    if (lvl < 1 || lvl > m) return;
    const std::int64_t key = fitness_key(e);
    auto& slot = ext[lvl];
    if (!slot.seen || key < slot.min_key) {
      slot.min_key = key;
      slot.min_x = x;
    }
    if (!slot.seen || key > slot.max_key) {
      slot.max_key = key;
      slot.max_x = x;
    }
    slot.seen = true;
  };
  MonotonicityReport rep;
  if (mode == MonotonicityMode::exhaustive) {
    if (n > 16)
      throw std::invalid_argument("check_monotonicity: exhaustive mode limited to n <= 16");
    for (std::uint64_t i = 0; i < (1ULL << n); ++i) account(Bitstring::from_index(n, i));
    rep.exhaustive = true;
  } else {
    if (samples < 1 || rng == nullptr)
      throw std::invalid_argument("check_monotonicity: sampled mode needs samples and rng");
    for (long i = 0; i < samples; ++i) account(Bitstring::random(n, *rng));
  }
  // Strict separation between consecutive occupied levels. Unoccupied levels
  // make the pair vacuous.
  int prev = 0;
  for (int j = 1; j <= m; ++j) {
    if (!ext[j].seen) continue;
    if (prev != 0 && ext[prev].max_key >= ext[j].min_key) {
      rep.ok = false;
      rep.witness = MonotonicityWitness{*ext[prev].max_x, *ext[j].min_x, prev};
      return rep;
    }
    prev = j;
  }
  return rep;
}

ConditionReport build_condition_report(const LevelPartition& partition,
                                       const FitnessMapping& mapping,
                                       const SelectionSpec& selection,
                                       const CrossoverSpec& crossover, int lambda,
                                       const ConditionInputs& inputs) {
  if (lambda < 1) throw std::invalid_argument("build_condition_report: lambda < 1");
  if (!inputs.s_star) throw std::invalid_argument("condition report: missing s_star");
  if (!inputs.p1) throw std::invalid_argument("condition report: missing p1");
  if (!inputs.epsilon) throw std::invalid_argument("condition report: missing epsilon");
  ConditionReport rep;
  rep.m = partition.num_intermediate();
  rep.s_star = *inputs.s_star;
  rep.s_star_estimated = inputs.s_star_estimated;
  rep.s_star_radius = inputs.s_star_radius;
  rep.p1 = *inputs.p1;
  rep.p1_estimated = inputs.p1_estimated;
  rep.epsilon = *inputs.epsilon;
  rep.epsilon_estimated = inputs.epsilon_estimated;
  rep.epsilon_radius = inputs.epsilon_radius;
  rep.per_level = inputs.per_level;
  rep.lambda_configured = lambda;

  rep.beta0_certified = true;
  switch (selection.kind) {
    case SelectionSpec::Kind::tournament: {
      const double alpha = static_cast<double>(selection.k) / lambda;
      rep.beta0 = beta0_tournament(alpha);
      break;
    }
    case SelectionSpec::Kind::mu_lambda:
      rep.beta0 = beta0_mu_lambda(selection.mu);
      break;
    case SelectionSpec::Kind::proportional: {
      rep.beta0 = beta0_proportional(selection.alpha);
      if (mapping.scaling != FitnessMapping::Scaling::power) {
        rep.beta0_certified = false;
        rep.notes.push_back("proportional selection pressure floor needs power scaling");
      } else {
        const double needed =
            nu_threshold(selection.alpha, lambda, partition.problem().optimum());
        if (!(mapping.nu > needed)) {
          rep.beta0_certified = false;
          rep.notes.push_back("scaling exponent nu below the proportional-selection threshold");
        }
      }
      break;
    }
  }

  crossover.validate(partition.problem().dimension());
  rep.lambda_required = lambda_lower_bound(rep.m, rep.s_star, rep.epsilon, rep.beta0);
  rep.lambda_ok = lambda >= rep.lambda_required;
  rep.success_floor = rep.p1 / std::exp(1.0);
  return rep;
}

}  // namespace levelga

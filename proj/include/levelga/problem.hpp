#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "levelga/bitstring.hpp"

namespace levelga {

// Outcome of one objective evaluation. `objective` is meaningful only when
// `feasible` is true; infeasible genotypes carry fitness 0 by convention.
struct Evaluation {
  bool feasible = false;
  std::int64_t objective = 0;
};

// Orders evaluations the way every selection operator does: any feasible
// genotype beats any infeasible one, feasible genotypes compare by objective.
// This order is invariant under the fitness scalings below (all are monotone
// increasing on feasible objectives), so rank-based operators never need the
// scaled value itself.
inline std::int64_t fitness_key(const Evaluation& e) {
  return e.feasible ? e.objective + 1 : 0;
}

inline bool fitness_less(const Evaluation& a, const Evaluation& b) {
  return fitness_key(a) < fitness_key(b);
}

// Pseudo-Boolean maximization problem with a feasibility predicate. The
// objective must be a nonnegative integer on feasible genotypes.
class Problem {
 public:
  virtual ~Problem();

  virtual std::string name() const = 0;
  virtual int dimension() const = 0;
  virtual bool is_feasible(const Bitstring& x) const = 0;
  // Precondition: is_feasible(x).
  virtual std::int64_t objective(const Bitstring& x) const = 0;
  // Maximal objective value over feasible genotypes.
  virtual std::int64_t optimum() const = 0;
  // True when every genotype is feasible.
  virtual bool unconstrained() const = 0;
  // Sorted distinct objective values attained on the feasible set, when known
  // analytically. Empty means unknown; level partitions then reject the
  // problem instead of guessing.
  virtual std::vector<std::int64_t> feasible_values() const { return {}; }

  Evaluation evaluate_raw(const Bitstring& x) const {
    if (x.size() != dimension()) throw std::invalid_argument(name() + ": dimension mismatch");
    if (!is_feasible(x)) return {false, 0};
    return {true, objective(x)};
  }
};

// Monotone rescaling applied to raw objectives before proportional selection.
// `raw` keeps the objective; `power` maps F to F^nu. Infeasible genotypes map
// to 0 under both.
struct FitnessMapping {
  enum class Scaling { raw, power };

  Scaling scaling = Scaling::raw;
  double nu = 1.0;

  double value(const Evaluation& e) const;

  // Selection weights for a population, proportional to the scaled fitness.
  // Under power scaling the weights are max-normalized and taken through the
  // log domain, (F/F_max)^nu = exp(nu*(ln F - ln F_max)), so they stay finite
  // for exponents far beyond what pow() could represent. Normalization does
  // not change the induced distribution. Infeasible entries get weight 0.
  std::vector<double> selection_weights(const std::vector<Evaluation>& evals) const;

  void validate() const;
};

// Owns the evaluation counter for one run or trial. Every call accounts for
// exactly one objective evaluation; hitting-time measurements are defined in
// terms of this count.
class Evaluator {
 public:
  Evaluator(const Problem& problem, FitnessMapping mapping)
      : problem_(&problem), mapping_(mapping) {
    mapping_.validate();
  }

  Evaluation evaluate(const Bitstring& x) {
    ++count_;
    return problem_->evaluate_raw(x);
  }

  // Scaled fitness of x; counts as one evaluation.
  double evaluate_fitness(const Bitstring& x) { return mapping_.value(evaluate(x)); }

  std::uint64_t evaluations() const { return count_; }
  const Problem& problem() const { return *problem_; }
  const FitnessMapping& mapping() const { return mapping_; }

 private:
  const Problem* problem_;
  FitnessMapping mapping_;
  std::uint64_t count_ = 0;
};

}  // namespace levelga

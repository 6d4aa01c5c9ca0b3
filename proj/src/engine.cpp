#include "levelga/engine.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace levelga {

void GaConfig::validate(int n) const {
  if (lambda < 1) throw std::invalid_argument("GaConfig: lambda < 1");
  if (crossover.arity == 2 && lambda % 2 != 0)
    throw std::invalid_argument("GaConfig: pairing crossover needs even lambda");
  selection.validate(lambda);
  crossover.validate(n);
  mutation.validate();
  if (t_max && *t_max < 1) throw std::invalid_argument("GaConfig: t_max < 1");
  if (multistart && !t_max)
    throw std::invalid_argument("GaConfig: multistart needs a per-run t_max");
  if (max_evaluations < 1) throw std::invalid_argument("GaConfig: max_evaluations < 1");
}

const Bitstring& best_of_run(const RunRecord& record) {
  if (!record.best) throw std::invalid_argument("best_of_run: no feasible genotype was seen");
  return *record.best;
}

namespace {

enum class Flow { proceed, hit, out_of_budget };

struct TrialState {
  Evaluator ev;
  const TargetPredicate& target;
  const RunHooks& hooks;
  std::uint64_t budget;
  RunRecord rec;

  // Evaluates x, maintains the best-so-far record, fires the observer, and
  // reports whether the trial is over. The returned evaluation is valid
  // either way.
  Flow step(const Bitstring& x, long generation, Evaluation& out) {
    out = ev.evaluate(x);
    if (hooks.on_evaluation) hooks.on_evaluation(x, out, ev.evaluations(), generation);
    if (out.feasible && (!rec.best_objective || out.objective > *rec.best_objective)) {
      rec.best_objective = out.objective;
      rec.best = x;
    }
    if (target(x, out)) {
      rec.hit = true;
      rec.hit_genotype = x;
      rec.evaluations = ev.evaluations();
      rec.generations = generation;
      return Flow::hit;
    }
    if (ev.evaluations() >= budget) return Flow::out_of_budget;
    return Flow::proceed;
  }
};

RunRecord run_impl(const GaConfig& config, const Problem& problem, const FitnessMapping& mapping,
                   const TargetPredicate& target, std::uint64_t seed, const RunHooks& hooks) {
  const int n = problem.dimension();
  config.validate(n);
  if (!target) throw std::invalid_argument("run_ga: null target predicate");

  TrialState st{Evaluator(problem, mapping), target, hooks, config.max_evaluations, RunRecord{}};
  st.rec.seed = seed;

  const auto initialize = [&](int dim, Rng& rng) {
    return hooks.initializer ? hooks.initializer(dim, rng) : Bitstring::random(dim, rng);
  };
  const auto mutate_one = [&](const Bitstring& x, Rng& rng) {
    return hooks.mutator ? hooks.mutator(x, rng) : mutate(x, config.mutation, rng);
  };

  for (std::uint64_t restart = 0;; ++restart) {
    Rng rng = config.multistart ? Rng(Rng::derive_seed(seed, restart)) : Rng(seed);
    st.rec.restarts = static_cast<long>(restart);

    std::vector<Bitstring> members;
    std::vector<Evaluation> evals;
    members.reserve(config.lambda);
    evals.reserve(config.lambda);
    Flow flow = Flow::proceed;
    for (int i = 0; i < config.lambda && flow == Flow::proceed; ++i) {
      members.push_back(initialize(n, rng));
      Evaluation e;
      flow = st.step(members.back(), 0, e);
      evals.push_back(e);
    }
    if (flow == Flow::hit) return st.rec;
    if (flow == Flow::out_of_budget) break;

    Population pop(std::move(members), std::move(evals), mapping);
    long t = 1;
    for (; !config.t_max || t <= *config.t_max; ++t) {
      std::vector<Bitstring> next;
      std::vector<Evaluation> next_evals;
      next.reserve(config.lambda);
      next_evals.reserve(config.lambda);
      const int iterations = config.crossover.arity == 2 ? config.lambda / 2 : config.lambda;
      for (int j = 0; j < iterations && flow == Flow::proceed; ++j) {
        const int a = select(pop, config.selection, rng);
        const int b = select(pop, config.selection, rng);
        CrossoverResult cr = crossover(pop.member(a), pop.member(b), config.crossover, rng);
        next.push_back(mutate_one(cr.first, rng));
        Evaluation e;
        flow = st.step(next.back(), t, e);
        next_evals.push_back(e);
        if (flow != Flow::proceed || config.crossover.arity != 2) continue;
        next.push_back(mutate_one(*cr.second, rng));
        flow = st.step(next.back(), t, e);
        next_evals.push_back(e);
      }
      if (flow == Flow::hit) return st.rec;
      if (flow == Flow::out_of_budget) break;
      pop = Population(std::move(next), std::move(next_evals), mapping);
    }
    if (flow == Flow::out_of_budget) {
      st.rec.generations = t;
      break;
    }
    // Cutoff expired: t_max full generations ran without a hit.
    st.rec.generations = *config.t_max;
    if (!config.multistart) break;
    if (st.ev.evaluations() >= config.max_evaluations) break;
  }
  st.rec.hit = false;
  st.rec.evaluations = st.ev.evaluations();
  return st.rec;
}

}  // namespace

RunRecord run_ga(const GaConfig& config, const Problem& problem, const FitnessMapping& mapping,
                 const TargetPredicate& target, std::uint64_t seed, const RunHooks& hooks) {
  return run_impl(config, problem, mapping, target, seed, hooks);
}

RunRecord run_ga(const GaConfig& config, const LevelPartition& partition,
                 const FitnessMapping& mapping, std::uint64_t seed, const RunHooks& hooks) {
  const TargetPredicate target = [&partition](const Bitstring& x, const Evaluation& e) {
    return partition.in_target(x, e);
  };
  return run_impl(config, partition.problem(), mapping, target, seed, hooks);
}

RunRecord run_multistart(const GaConfig& config, const Problem& problem,
                         const FitnessMapping& mapping, const TargetPredicate& target,
                         std::uint64_t seed, const RunHooks& hooks) {
  if (!config.multistart || !config.t_max)
    throw std::invalid_argument("run_multistart: config must set multistart and t_max");
  return run_impl(config, problem, mapping, target, seed, hooks);
}

}  // namespace levelga

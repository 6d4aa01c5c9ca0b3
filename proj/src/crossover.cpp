#include "levelga/crossover.hpp"

#include <stdexcept>

#include "levelga/stats.hpp"

namespace levelga {

void CrossoverSpec::validate(int n) const {
  if (!(pc >= 0.0 && pc <= 1.0)) throw std::invalid_argument("CrossoverSpec: pc outside [0,1]");
  if (arity != 1 && arity != 2) throw std::invalid_argument("CrossoverSpec: arity must be 1 or 2");
  if (kind == Kind::single_point && n < 2)
    throw std::invalid_argument("CrossoverSpec: single-point crossover needs n >= 2");
}

std::pair<Bitstring, Bitstring> single_point_splice(const Bitstring& x, const Bitstring& y,
                                                    int chi) {
  const int n = x.size();
  if (y.size() != n) throw std::invalid_argument("single_point_splice: dimension mismatch");
  if (chi < 1 || chi >= n) throw std::invalid_argument("single_point_splice: chi outside [1,n-1]");
  Bitstring a(n), b(n);
  auto& aw = a.words();
  auto& bw = b.words();
  const auto& xw = x.words();
  const auto& yw = y.words();
  const std::size_t cut_word = static_cast<std::size_t>(chi) >> 6;
  const int cut_bit = chi & 63;
  for (std::size_t i = 0; i < aw.size(); ++i) {
    if (i < cut_word) {
      aw[i] = xw[i];
      bw[i] = yw[i];
    } else if (i > cut_word || cut_bit == 0) {
      aw[i] = yw[i];
      bw[i] = xw[i];
    } else {
      const std::uint64_t low = (1ULL << cut_bit) - 1;
      aw[i] = (xw[i] & low) | (yw[i] & ~low);
      bw[i] = (yw[i] & low) | (xw[i] & ~low);
    }
  }
  return {a, b};
}

CrossoverResult crossover(const Bitstring& x, const Bitstring& y, const CrossoverSpec& spec,
                          Rng& rng) {
  spec.validate(x.size());
  if (y.size() != x.size()) throw std::invalid_argument("crossover: dimension mismatch");
  if (spec.kind == CrossoverSpec::Kind::pass_through) {
    if (spec.arity == 1) return {x, std::nullopt};
    return {x, y};
  }
  if (rng.next_bernoulli(spec.pc)) {
    const int chi = 1 + static_cast<int>(rng.next_below(x.size() - 1));
    auto [a, b] = single_point_splice(x, y, chi);
    if (spec.arity == 1) return {std::move(a), std::nullopt};
    return {std::move(a), std::move(b)};
  }
  if (spec.arity == 1) return {x, std::nullopt};
  return {x, y};
}

EpsilonEstimate estimate_crossover_epsilon(const Problem& problem, const CrossoverSpec& spec,
                                           const PairSampler& sampler, long trials, Rng& rng) {
  if (trials < 1) throw std::invalid_argument("estimate_crossover_epsilon: trials < 1");
  long successes = 0;
  for (long t = 0; t < trials; ++t) {
    const auto [x, y] = sampler(rng);
    const auto ex = problem.evaluate_raw(x);
    const auto ey = problem.evaluate_raw(y);
    const std::int64_t parents = std::max(fitness_key(ex), fitness_key(ey));
    const CrossoverResult r = crossover(x, y, spec, rng);
    std::int64_t kept = fitness_key(problem.evaluate_raw(r.first));
    if (r.second)
      kept = std::max(kept, fitness_key(problem.evaluate_raw(*r.second)));
    if (kept >= parents) ++successes;
  }
  EpsilonEstimate est;
  est.trials = trials;
  est.successes = successes;
  est.value = static_cast<double>(successes) / static_cast<double>(trials);
  est.radius = binomial_confidence_radius(est.value, trials, 0.99);
  return est;
}

}  // namespace levelga

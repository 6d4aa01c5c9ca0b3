#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "levelga/problem.hpp"
#include "levelga/rng.hpp"

namespace levelga {

struct CrossoverSpec {
  enum class Kind { single_point, pass_through };

  Kind kind = Kind::pass_through;
  double pc = 0.0;  // probability of recombining; otherwise parents are copied
  int arity = 2;    // offspring kept per application, 1 or 2

  void validate(int n) const;
};

struct CrossoverResult {
  Bitstring first;
  std::optional<Bitstring> second;  // present iff arity == 2
};

// Exchange of tails after cut point chi, counted in genes: the first chi genes
// of each offspring come from one parent, the rest from the other.
std::pair<Bitstring, Bitstring> single_point_splice(const Bitstring& x, const Bitstring& y,
                                                    int chi);

// With probability pc picks chi uniformly from {1..n-1} and splices, else
// copies the parents. pass_through always copies and consumes no randomness.
CrossoverResult crossover(const Bitstring& x, const Bitstring& y, const CrossoverSpec& spec,
                          Rng& rng);

struct EpsilonEstimate {
  double value = 0.0;
  double radius = 0.0;  // 99% binomial confidence radius
  long trials = 0;
  long successes = 0;
};

using PairSampler = std::function<std::pair<Bitstring, Bitstring>(Rng&)>;

// Monte Carlo estimate of the probability that crossover does not lose the
// best fitness of the parent pair: max fitness over kept offspring >= max
// fitness over parents. Pairs come from the caller-supplied sampler, so the
// same estimator serves uniform pairs and adversarial level-stratified pairs.
EpsilonEstimate estimate_crossover_epsilon(const Problem& problem, const CrossoverSpec& spec,
                                           const PairSampler& sampler, long trials, Rng& rng);

}  // namespace levelga

#pragma once

#include <cstdint>

#include "levelga/population.hpp"
#include "levelga/rng.hpp"

namespace levelga {

class LevelPartition;

struct SelectionSpec {
  enum class Kind { tournament, mu_lambda, proportional };

  Kind kind = Kind::tournament;
  int k = 2;           // tournament size
  int mu = 1;          // elite pool size for (mu,lambda)-selection
  double alpha = 1.0;  // pressure parameter behind the beta0 formulas

  void validate(int lambda) const;
};

// Draws one parent index.
//  tournament:   k indices uniform with replacement, winner has maximal
//                fitness; ties are broken uniformly among the tied samples.
//  mu_lambda:    uniform over the mu fittest (descending fitness, index as
//                tiebreaker).
//  proportional: probability fitness_i / sum fitness_j, by inversion of the
//                population's cumulative weights; uniform fallback when all
//                weights are zero.
int select(const Population& pop, const SelectionSpec& spec, Rng& rng);

// Exact probability that one select() call returns a member of the highest
// occupied level of the partition. Exact on populations where equal fitness
// implies equal level (always true off the target set of a partition whose
// intermediate levels are strictly fitness-separated).
double selective_pressure_exact(const Population& pop, const LevelPartition& partition,
                                const SelectionSpec& spec);

// Selective pressure floors guaranteed by the operator configurations.
double beta0_tournament(double alpha);     // k >= alpha*lambda: 1 - e^{-alpha}
double beta0_mu_lambda(int mu);            // 1/mu
double beta0_proportional(double alpha);   // 1/(1 + 1/alpha), with power scaling

// Scaling exponent above which proportional selection reaches the
// beta0_proportional floor: max(0, ln(alpha*lambda) * f_star). `lambda` is
// real-valued so callers can probe the formula directly.
double nu_threshold(double alpha, double lambda, std::int64_t f_star);

}  // namespace levelga

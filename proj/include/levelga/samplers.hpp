#pragma once

#include "levelga/crossover.hpp"
#include "levelga/levels.hpp"

namespace levelga {

// Uniform genotype with exactly `ones` one-genes.
Bitstring random_with_ones(int n, int ones, Rng& rng);

// Genotype source for the partition's levels (1..m+1). For the built-in
// benchmarks under value-grouped partitions the samples are constructed
// directly and are uniform within their level; otherwise the source falls
// back to rejection from the uniform distribution and gives up (nullopt)
// after a bounded number of attempts.
LevelSampler make_level_sampler(const LevelPartition& partition);

// Independent uniform parents.
PairSampler uniform_pair_sampler(int n);

// Adversarial pairs for crossover-preservation estimates: one parent drawn
// from a uniformly chosen level (the fit side), the other uniform on the
// cube, in random order. Stresses exactly the pairs where crossover has
// something to lose.
PairSampler stratified_pair_sampler(const LevelPartition& partition, LevelSampler levels);

}  // namespace levelga

#pragma once

#include "levelga/bitstring.hpp"
#include "levelga/rng.hpp"

namespace levelga {

struct MutationSpec {
  enum class Kind { bitwise, point };

  Kind kind = Kind::bitwise;
  // bitwise: independent per-gene flip probability. point: probability that
  // exactly one uniformly chosen gene flips (otherwise the copy is returned).
  double pm = 0.0;

  void validate() const;
};

Bitstring mutate(const Bitstring& x, const MutationSpec& spec, Rng& rng);

// Probability that bitwise mutation with rate pm turns a given genotype into
// a fixed genotype at Hamming distance d: pm^d * (1-pm)^(n-d). Computed in
// the log domain so it stays meaningful for large n.
double mutation_transition_prob(int n, double pm, int d);

// Lower bound (K/(e*n))^K on the transition probability to any genotype
// within Hamming distance K of the input when pm = K/n. Requires K <= n/2.
double mutation_neighbor_lower_bound(int n, int k_radius);

}  // namespace levelga

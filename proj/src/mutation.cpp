#include "levelga/mutation.hpp"

#include <cmath>
#include <stdexcept>

namespace levelga {

void MutationSpec::validate() const {
  if (!(pm >= 0.0 && pm <= 1.0)) throw std::invalid_argument("MutationSpec: pm outside [0,1]");
}

Bitstring mutate(const Bitstring& x, const MutationSpec& spec, Rng& rng) {
  spec.validate();
  Bitstring y = x;
  switch (spec.kind) {
    case MutationSpec::Kind::bitwise:
      for (int i = 0; i < y.size(); ++i)
        if (rng.next_bernoulli(spec.pm)) y.flip(i);
      break;
    case MutationSpec::Kind::point:
      if (rng.next_bernoulli(spec.pm)) y.flip(static_cast<int>(rng.next_below(y.size())));
      break;
  }
  return y;
}

double mutation_transition_prob(int n, double pm, int d) {
  if (n < 1) throw std::invalid_argument("mutation_transition_prob: n < 1");
  if (d < 0 || d > n) throw std::invalid_argument("mutation_transition_prob: d outside [0,n]");
  if (!(pm >= 0.0 && pm <= 1.0))
    throw std::invalid_argument("mutation_transition_prob: pm outside [0,1]");
  // The log form breaks down at the boundary rates, where the result is 0/1.
  if (pm == 0.0) return d == 0 ? 1.0 : 0.0;
  if (pm == 1.0) return d == n ? 1.0 : 0.0;
  return std::exp(d * std::log(pm) + (n - d) * std::log1p(-pm));
}

double mutation_neighbor_lower_bound(int n, int k_radius) {
  if (n < 1) throw std::invalid_argument("mutation_neighbor_lower_bound: n < 1");
  if (k_radius < 1 || 2 * k_radius > n)
    throw std::invalid_argument("mutation_neighbor_lower_bound: need 1 <= K <= n/2");
  const double k = k_radius;
  return std::exp(k * std::log(k / (std::exp(1.0) * n)));
}

}  // namespace levelga

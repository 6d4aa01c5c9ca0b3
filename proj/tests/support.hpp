#pragma once

#include <functional>
#include <vector>

#include "levelga/bitstring.hpp"
#include "levelga/mutation.hpp"
#include "levelga/rng.hpp"

namespace levelga::testing {

// Literal reading of the set-cover family: one constraint row per
// (n-p+1)-element subset of [n], and x covers iff its index set intersects
// every row. Independent of the closed-form threshold test in the library.
inline bool balas_covers_bruteforce(const Bitstring& x, int p) {
  const int n = x.size();
  const int row = n - p + 1;
  std::vector<int> idx(row);
  for (int i = 0; i < row; ++i) idx[i] = i;
  for (;;) {
    bool intersects = false;
    for (const int i : idx)
      if (x.get(i)) {
        intersects = true;
        break;
      }
    if (!intersects) return false;
    int i = row - 1;
    while (i >= 0 && idx[i] == n - row + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int k = i + 1; k < row; ++k) idx[k] = idx[k - 1] + 1;
  }
  return true;
}

// Mutation with an absorbing infeasible region for the set-cover encoding
// (feasible iff at least `p` ones): infeasible inputs pass through unchanged,
// feasible inputs drop below the threshold with probability `jump` and are
// bitwise-mutated otherwise. Single runs that fall below the threshold can
// never climb back; only a restart recovers.
inline std::function<Bitstring(const Bitstring&, Rng&)> absorbing_mutator(int p, double jump,
                                                                          double pm) {
  return [p, jump, pm](const Bitstring& x, Rng& rng) {
    if (x.count_ones() < p) return x;
    if (rng.next_bernoulli(jump)) {
      Bitstring y = x;
      int excess = y.count_ones() - (p - 1);
      for (int i = 0; i < y.size() && excess > 0; ++i)
        if (y.get(i)) {
          y.set(i, false);
          --excess;
        }
      return y;
    }
    return mutate(x, MutationSpec{MutationSpec::Kind::bitwise, pm}, rng);
  };
}

}  // namespace levelga::testing

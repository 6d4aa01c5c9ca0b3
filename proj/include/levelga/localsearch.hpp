#pragma once

#include <functional>
#include <vector>

#include "levelga/problem.hpp"

namespace levelga {

// Hamming ball of the given radius around a genotype, excluding the genotype
// itself and everything infeasible.
struct NeighborhoodSpec {
  int radius = 1;

  void validate(int n) const;
};

// Visits the feasible neighbors in a fixed order: flipped-index subsets by
// increasing size, lexicographic within each size. Every neighbor appears
// exactly once. The visitor returns false to stop early; the function returns
// false iff a visitor stopped it.
bool visit_neighbors(const Problem& problem, const Bitstring& x, const NeighborhoodSpec& spec,
                     const std::function<bool(const Bitstring&)>& visit);

std::vector<Bitstring> neighbors(const Problem& problem, const Bitstring& x,
                                 const NeighborhoodSpec& spec);

// True iff no feasible neighbor scores strictly higher. Rejects infeasible x.
bool is_local_optimum(const Problem& problem, const Bitstring& x, const NeighborhoodSpec& spec);

enum class PivotRule { first_improvement, best_improvement };

struct LocalSearchResult {
  Bitstring endpoint;
  std::int64_t objective = 0;
  long iterations = 0;  // accepted moves, each strictly improving
};

// Strict ascent from a feasible start to a local optimum. first_improvement
// takes the first improving neighbor in visiting order; best_improvement
// scans the whole neighborhood and takes the best (earliest among ties).
LocalSearchResult local_search(const Problem& problem, const Bitstring& start,
                               const NeighborhoodSpec& spec, PivotRule rule);

}  // namespace levelga

#include "levelga/localsearch.hpp"

#include <numeric>
#include <stdexcept>

namespace levelga {

void NeighborhoodSpec::validate(int n) const {
  if (radius < 1 || radius > n)
    throw std::invalid_argument("NeighborhoodSpec: radius outside [1,n]");
}

bool visit_neighbors(const Problem& problem, const Bitstring& x, const NeighborhoodSpec& spec,
                     const std::function<bool(const Bitstring&)>& visit) {
  const int n = x.size();
  spec.validate(n);
  if (x.size() != problem.dimension())
    throw std::invalid_argument("visit_neighbors: dimension mismatch");
  std::vector<int> idx;
  for (int d = 1; d <= spec.radius; ++d) {
    // Subsets of size d in lexicographic order via the usual odometer step.
    idx.resize(d);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      Bitstring y = x;
      for (int i : idx) y.flip(i);
      if (problem.is_feasible(y) && !visit(y)) return false;
      int pos = d - 1;
      while (pos >= 0 && idx[pos] == n - d + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int j = pos + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return true;
}

std::vector<Bitstring> neighbors(const Problem& problem, const Bitstring& x,
                                 const NeighborhoodSpec& spec) {
  std::vector<Bitstring> out;
  visit_neighbors(problem, x, spec, [&](const Bitstring& y) {
    out.push_back(y);
    return true;
  });
  return out;
}

bool is_local_optimum(const Problem& problem, const Bitstring& x, const NeighborhoodSpec& spec) {
  if (!problem.is_feasible(x))
    throw std::invalid_argument("is_local_optimum: infeasible genotype");
  const std::int64_t fx = problem.objective(x);
  return visit_neighbors(problem, x, spec,
                         [&](const Bitstring& y) { return problem.objective(y) <= fx; });
}

LocalSearchResult local_search(const Problem& problem, const Bitstring& start,
                               const NeighborhoodSpec& spec, PivotRule rule) {
  if (!problem.is_feasible(start))
    throw std::invalid_argument("local_search: infeasible start");
  LocalSearchResult res{start, problem.objective(start), 0};
  for (;;) {
    bool moved = false;
    if (rule == PivotRule::first_improvement) {
      visit_neighbors(problem, res.endpoint, spec, [&](const Bitstring& y) {
        const std::int64_t fy = problem.objective(y);
        if (fy > res.objective) {
          res.endpoint = y;
          res.objective = fy;
          moved = true;
          return false;
        }
        return true;
      });
    } else {
      Bitstring best = res.endpoint;
      std::int64_t best_f = res.objective;
      visit_neighbors(problem, res.endpoint, spec, [&](const Bitstring& y) {
        const std::int64_t fy = problem.objective(y);
        if (fy > best_f) {
          best = y;
          best_f = fy;
        }
        return true;
      });
      if (best_f > res.objective) {
        res.endpoint = std::move(best);
        res.objective = best_f;
        moved = true;
      }
    }
    if (!moved) return res;
    ++res.iterations;
  }
}

}  // namespace levelga

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "levelga/problem.hpp"

namespace levelga {

// Evaluated population of fixed size. Immutable once built; generations are
// represented by fresh Population objects. Construction precomputes the two
// views selection operators need: a fitness-descending rank order (ties broken
// by lower index, so the order is deterministic) and cumulative proportional
// weights.
class Population {
 public:
  Population(std::vector<Bitstring> members, std::vector<Evaluation> evals,
             const FitnessMapping& mapping)
      : members_(std::move(members)), evals_(std::move(evals)) {
    if (members_.empty()) throw std::invalid_argument("Population: empty");
    if (members_.size() != evals_.size())
      throw std::invalid_argument("Population: member/evaluation size mismatch");
    keys_.resize(members_.size());
    for (std::size_t i = 0; i < members_.size(); ++i) keys_[i] = fitness_key(evals_[i]);

    ranked_.resize(members_.size());
    std::iota(ranked_.begin(), ranked_.end(), 0u);
    std::sort(ranked_.begin(), ranked_.end(), [&](std::uint32_t a, std::uint32_t b) {
      if (keys_[a] != keys_[b]) return keys_[a] > keys_[b];
      return a < b;
    });

    const std::vector<double> w = mapping.selection_weights(evals_);
    cumulative_.resize(w.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      acc += w[i];
      cumulative_[i] = acc;
    }
    total_weight_ = acc;
  }

  // Evaluates the members in index order through `ev`, counting each one.
  static Population evaluated(std::vector<Bitstring> members, Evaluator& ev) {
    std::vector<Evaluation> evals;
    evals.reserve(members.size());
    for (const auto& x : members) evals.push_back(ev.evaluate(x));
    return Population(std::move(members), std::move(evals), ev.mapping());
  }

  int size() const { return static_cast<int>(members_.size()); }
  const Bitstring& member(int i) const { return members_[i]; }
  const Evaluation& evaluation(int i) const { return evals_[i]; }
  const std::vector<Evaluation>& evaluations() const { return evals_; }
  std::int64_t key(int i) const { return keys_[i]; }
  const std::vector<std::int64_t>& keys() const { return keys_; }

  // Indices sorted by descending fitness, then ascending index.
  const std::vector<std::uint32_t>& ranked() const { return ranked_; }

  const std::vector<double>& cumulative_weights() const { return cumulative_; }
  double total_weight() const { return total_weight_; }

 private:
  std::vector<Bitstring> members_;
  std::vector<Evaluation> evals_;
  std::vector<std::int64_t> keys_;
  std::vector<std::uint32_t> ranked_;
  std::vector<double> cumulative_;
  double total_weight_ = 0.0;
};

}  // namespace levelga

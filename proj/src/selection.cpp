#include "levelga/selection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "levelga/levels.hpp"

namespace levelga {

void SelectionSpec::validate(int lambda) const {
  if (lambda < 1) throw std::invalid_argument("SelectionSpec: lambda < 1");
  switch (kind) {
    case Kind::tournament:
      if (k < 1) throw std::invalid_argument("SelectionSpec: tournament size < 1");
      break;
    case Kind::mu_lambda:
      if (mu < 1 || mu > lambda)
        throw std::invalid_argument("SelectionSpec: mu outside [1,lambda]");
      break;
    case Kind::proportional:
      if (!(alpha > 0.0)) throw std::invalid_argument("SelectionSpec: alpha <= 0");
      break;
  }
}

namespace {

// Scratch buffer for tournament samples. Selection is the innermost loop of
// every run, so the buffer is reused across calls within a thread.
thread_local std::vector<std::uint32_t> tournament_buf;

int select_tournament(const Population& pop, int k, Rng& rng) {
  const auto lambda = static_cast<std::uint32_t>(pop.size());
  tournament_buf.resize(k);
  rng.fill_indices(tournament_buf, lambda);
  const auto& keys = pop.keys();
  std::int64_t best = -1;
  int ties = 0;
  for (const auto idx : tournament_buf) {
    const std::int64_t key = keys[idx];
    if (key > best) {
      best = key;
      ties = 1;
    } else if (key == best) {
      ++ties;
    }
  }
  std::uint64_t pick = ties > 1 ? rng.next_below(ties) : 0;
  for (const auto idx : tournament_buf) {
    if (keys[idx] == best) {
      if (pick == 0) return static_cast<int>(idx);
      --pick;
    }
  }
  throw std::logic_error("select_tournament: winner scan failed");
}

int select_mu_lambda(const Population& pop, int mu, Rng& rng) {
  return static_cast<int>(pop.ranked()[rng.next_below(mu)]);
}

int select_proportional(const Population& pop, Rng& rng) {
  const double total = pop.total_weight();
  if (total <= 0.0) return static_cast<int>(rng.next_below(pop.size()));
  const auto& cum = pop.cumulative_weights();
  const double u = rng.next_double() * total;
  auto it = std::upper_bound(cum.begin(), cum.end(), u);
  if (it == cum.end()) {
    // u landed on the top edge through rounding; take the last member with
    // positive weight.
    std::size_t i = cum.size() - 1;
    while (i > 0 && cum[i - 1] == cum[i]) --i;
    return static_cast<int>(i);
  }
  return static_cast<int>(it - cum.begin());
}

}  // namespace

int select(const Population& pop, const SelectionSpec& spec, Rng& rng) {
  spec.validate(pop.size());
  switch (spec.kind) {
    case SelectionSpec::Kind::tournament:
      return select_tournament(pop, spec.k, rng);
    case SelectionSpec::Kind::mu_lambda:
      return select_mu_lambda(pop, spec.mu, rng);
    case SelectionSpec::Kind::proportional:
      return select_proportional(pop, rng);
  }
  throw std::logic_error("select: unknown kind");
}

double selective_pressure_exact(const Population& pop, const LevelPartition& partition,
                                const SelectionSpec& spec) {
  spec.validate(pop.size());
  const int lambda = pop.size();
  std::vector<int> level(lambda);
  int top = 0;
  for (int i = 0; i < lambda; ++i) {
    level[i] = partition.level_of(pop.member(i), pop.evaluation(i));
    top = std::max(top, level[i]);
  }
  int b = 0;
  for (int i = 0; i < lambda; ++i)
    if (level[i] == top) ++b;
  switch (spec.kind) {
    case SelectionSpec::Kind::tournament: {
      const double miss = static_cast<double>(lambda - b) / lambda;
      return 1.0 - std::pow(miss, spec.k);
    }
    case SelectionSpec::Kind::mu_lambda: {
      // The elite pool is deterministic, so the probability is the fraction
      // of top-level members actually inside it.
      int hits = 0;
      for (int r = 0; r < spec.mu; ++r)
        if (level[pop.ranked()[r]] == top) ++hits;
      return static_cast<double>(hits) / spec.mu;
    }
    case SelectionSpec::Kind::proportional: {
      const double total = pop.total_weight();
      if (total <= 0.0) return static_cast<double>(b) / lambda;
      const auto& cum = pop.cumulative_weights();
      double share = 0.0;
      for (int i = 0; i < lambda; ++i)
        if (level[i] == top) share += cum[i] - (i == 0 ? 0.0 : cum[i - 1]);
      return share / total;
    }
  }
  throw std::logic_error("selective_pressure_exact: unknown kind");
}

double beta0_tournament(double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("beta0_tournament: alpha <= 0");
  return 1.0 - std::exp(-alpha);
}

double beta0_mu_lambda(int mu) {
  if (mu < 1) throw std::invalid_argument("beta0_mu_lambda: mu < 1");
  return 1.0 / mu;
}

double beta0_proportional(double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("beta0_proportional: alpha <= 0");
  return 1.0 / (1.0 + 1.0 / alpha);
}

double nu_threshold(double alpha, double lambda, std::int64_t f_star) {
  if (!(alpha > 0.0)) throw std::invalid_argument("nu_threshold: alpha <= 0");
  if (!(lambda > 0.0)) throw std::invalid_argument("nu_threshold: lambda <= 0");
  if (f_star < 1) throw std::invalid_argument("nu_threshold: f_star < 1");
  return std::max(0.0, std::log(alpha * lambda) * static_cast<double>(f_star));
}

}  // namespace levelga

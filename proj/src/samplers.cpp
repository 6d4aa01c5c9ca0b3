#include "levelga/samplers.hpp"

#include <numeric>
#include <stdexcept>

namespace levelga {

Bitstring random_with_ones(int n, int ones, Rng& rng) {
  if (ones < 0 || ones > n) throw std::invalid_argument("random_with_ones: count outside [0,n]");
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  Bitstring x(n);
  for (int i = 0; i < ones; ++i) {
    const int j = i + static_cast<int>(rng.next_below(n - i));
    std::swap(idx[i], idx[j]);
    x.set(idx[i], true);
  }
  return x;
}

namespace {

constexpr int kRejectionAttempts = 20000;

std::optional<Bitstring> rejection_sample(const LevelPartition& partition, int level, Rng& rng) {
  const int n = partition.problem().dimension();
  for (int a = 0; a < kRejectionAttempts; ++a) {
    Bitstring x = Bitstring::random(n, rng);
    if (partition.level_of(x) == level) return x;
  }
  return std::nullopt;
}

// Leading-ones count v: ones prefix of length v, a forced zero, uniform tail.
Bitstring leading_ones_sample(int n, std::int64_t v, Rng& rng) {
  Bitstring x = Bitstring::random(n, rng);
  for (int i = 0; i < v; ++i) x.set(i, true);
  if (v < n) x.set(static_cast<int>(v), false);
  return x;
}

}  // namespace

LevelSampler make_level_sampler(const LevelPartition& partition) {
  const auto kind = partition.kind();
  const bool value_grouped = kind == LevelPartition::Kind::canonical ||
                             kind == LevelPartition::Kind::canonical_with_infeasible_a0;
  const std::string name = partition.problem().name();
  if (value_grouped && (name == "leadingones" || name == "onemax" || name == "balas")) {
    return [&partition, name](int level, Rng& rng) -> std::optional<Bitstring> {
      const int m = partition.num_intermediate();
      if (level < 1 || level > m + 1)
        throw std::invalid_argument("level sampler: level outside [1,m+1]");
      const Problem& problem = partition.problem();
      const int n = problem.dimension();
      const std::int64_t v = level <= m ? *partition.level_value(level) : problem.optimum();
      if (name == "leadingones") return leading_ones_sample(n, v, rng);
      if (name == "onemax") return random_with_ones(n, static_cast<int>(v), rng);
      // balas: score v means n - v + 1 selected columns
      return random_with_ones(n, static_cast<int>(n - v + 1), rng);
    };
  }
  return [&partition](int level, Rng& rng) -> std::optional<Bitstring> {
    const int m = partition.num_intermediate();
    if (level < 1 || level > m + 1)
      throw std::invalid_argument("level sampler: level outside [1,m+1]");
    return rejection_sample(partition, level, rng);
  };
}

PairSampler uniform_pair_sampler(int n) {
  if (n < 1) throw std::invalid_argument("uniform_pair_sampler: n < 1");
  return [n](Rng& rng) {
    return std::make_pair(Bitstring::random(n, rng), Bitstring::random(n, rng));
  };
}

PairSampler stratified_pair_sampler(const LevelPartition& partition, LevelSampler levels) {
  if (!levels) throw std::invalid_argument("stratified_pair_sampler: null level sampler");
  const int n = partition.problem().dimension();
  const int m = partition.num_intermediate();
  return [n, m, levels = std::move(levels)](Rng& rng) {
    const int level = 1 + static_cast<int>(rng.next_below(m + 1));
    auto fit = levels(level, rng);
    Bitstring a = fit ? std::move(*fit) : Bitstring::random(n, rng);
    Bitstring b = Bitstring::random(n, rng);
    if (rng.next_bernoulli(0.5)) std::swap(a, b);
    return std::make_pair(std::move(a), std::move(b));
  };
}

}  // namespace levelga

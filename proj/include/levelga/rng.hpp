#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace levelga {

// Deterministic random stream. The engine is std::mt19937_64 (its output for a
// given seed is pinned by the standard), but all derived quantities (bounded
// integers, unit doubles, coin flips) are produced here rather than through
// std::*_distribution, whose output is implementation defined. Identical seeds
// therefore give identical trajectories on any toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  // Number of engine invocations so far. Used by tests that assert disjoint
  // draw ranges between pipeline stages.
  std::uint64_t draw_count() const { return draws_; }

  std::uint64_t next_u64() {
    ++draws_;
    return engine_();
  }

  // Uniform on [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on {0, ..., bound-1}, unbiased via multiply-shift with rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (-bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next_u64()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  bool next_bernoulli(double p) { return next_double() < p; }

  // Fills `out` with uniform indices below `bound`, two per engine call
  // (each 64-bit word feeds two 32-bit multiply-shift samples). Requires
  // bound <= 2^32. Statistically identical to calling next_below in a loop;
  // exists because tournament selection draws indices in bulk.
  void fill_indices(std::span<std::uint32_t> out, std::uint32_t bound) {
    if (bound <= 1) {
      for (auto& v : out) v = 0;
      return;
    }
    const std::uint32_t threshold = static_cast<std::uint32_t>(-bound) % bound;
    std::uint64_t word = 0;
    int have = 0;
    for (auto& v : out) {
      for (;;) {
        if (have == 0) {
          word = next_u64();
          have = 2;
        }
        const auto half = static_cast<std::uint32_t>(word);
        word >>= 32;
        --have;
        const std::uint64_t m = static_cast<std::uint64_t>(half) * bound;
        if (static_cast<std::uint32_t>(m) >= threshold) {
          v = static_cast<std::uint32_t>(m >> 32);
          break;
        }
      }
    }
  }

  // splitmix64 mix of (base, index); used to give trials and restarts their
  // own recorded, reconstructible seeds.
  static std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  Rng spawn(std::uint64_t index) const { return Rng(derive_seed(seed_, index)); }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
  std::uint64_t draws_ = 0;
};

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return Rng::derive_seed(base, index);
}

}  // namespace levelga

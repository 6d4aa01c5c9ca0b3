#include "levelga/problems.hpp"

#include <numeric>
#include <stdexcept>

namespace levelga {

namespace {

int checked_dimension(int n) {
  if (n < 1) throw std::invalid_argument("problem dimension must be >= 1");
  return n;
}

std::vector<std::int64_t> range_values(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v(hi - lo + 1);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

}  // namespace

LeadingOnes::LeadingOnes(int n) : n_(checked_dimension(n)) {}

std::vector<std::int64_t> LeadingOnes::feasible_values() const { return range_values(0, n_); }

OneMax::OneMax(int n) : n_(checked_dimension(n)) {}

std::vector<std::int64_t> OneMax::feasible_values() const { return range_values(0, n_); }

BalasSetCover::BalasSetCover(int n, int p) : n_(checked_dimension(n)), p_(p) {
  if (p < 1 || p > n) throw std::invalid_argument("BalasSetCover: need 1 <= p <= n");
}

std::vector<std::int64_t> BalasSetCover::feasible_values() const {
  // |ones| ranges over [p, n] on covers, so F = n - |ones| + 1 over [1, n-p+1].
  return range_values(1, n_ - p_ + 1);
}

std::shared_ptr<const Problem> make_problem(const std::string& name, int n, int p) {
  if (name == "leadingones") return std::make_shared<LeadingOnes>(n);
  if (name == "onemax") return std::make_shared<OneMax>(n);
  if (name == "balas") {
    if (p < 1) {
      if (n % 2 != 0) throw std::invalid_argument("balas: default p = n/2 needs even n");
      p = n / 2;
    }
    return std::make_shared<BalasSetCover>(n, p);
  }
  throw std::invalid_argument("unknown problem: " + name);
}

}  // namespace levelga

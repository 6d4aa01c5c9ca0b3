#pragma once

#include <memory>

#include "levelga/problem.hpp"

namespace levelga {

// Count of the maximal all-ones prefix; every genotype feasible.
class LeadingOnes final : public Problem {
 public:
  explicit LeadingOnes(int n);
  std::string name() const override { return "leadingones"; }
  int dimension() const override { return n_; }
  bool is_feasible(const Bitstring&) const override { return true; }
  std::int64_t objective(const Bitstring& x) const override { return x.leading_ones(); }
  std::int64_t optimum() const override { return n_; }
  bool unconstrained() const override { return true; }
  std::vector<std::int64_t> feasible_values() const override;

 private:
  int n_;
};

// Number of one-genes; every genotype feasible.
class OneMax final : public Problem {
 public:
  explicit OneMax(int n);
  std::string name() const override { return "onemax"; }
  int dimension() const override { return n_; }
  bool is_feasible(const Bitstring&) const override { return true; }
  std::int64_t objective(const Bitstring& x) const override { return x.count_ones(); }
  std::int64_t optimum() const override { return n_; }
  bool unconstrained() const override { return true; }
  std::vector<std::int64_t> feasible_values() const override;

 private:
  int n_;
};

// Set cover instance B(n, p): one row for every (n-p+1)-element subset N of
// {1..n}, where the columns selected by x cover row N iff they intersect N.
// A selection J covers every row iff its complement contains no such subset,
// i.e. iff |J| >= p; that closed form is what the implementation uses, and
// tests check it against literal enumeration of all C(n, p-1) rows. Covers
// score n - |J| + 1, so the optimum n - p + 1 is attained exactly by the
// minimum covers. Genotypes with |J| < p are infeasible.
class BalasSetCover final : public Problem {
 public:
  BalasSetCover(int n, int p);
  std::string name() const override { return "balas"; }
  int dimension() const override { return n_; }
  bool is_feasible(const Bitstring& x) const override { return x.count_ones() >= p_; }
  std::int64_t objective(const Bitstring& x) const override { return n_ - x.count_ones() + 1; }
  std::int64_t optimum() const override { return n_ - p_ + 1; }
  bool unconstrained() const override { return false; }
  std::vector<std::int64_t> feasible_values() const override;

  int cover_threshold() const { return p_; }

 private:
  int n_;
  int p_;
};

// Factory used by the experiment harness; `p` is ignored except for "balas",
// where p < 1 means the default n/2.
std::shared_ptr<const Problem> make_problem(const std::string& name, int n, int p = -1);

}  // namespace levelga

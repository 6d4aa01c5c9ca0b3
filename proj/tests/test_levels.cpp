#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "levelga/levels.hpp"
#include "levelga/mutation.hpp"
#include "levelga/problems.hpp"
#include "levelga/samplers.hpp"
#include "levelga/selection.hpp"

using namespace levelga;

TEST_CASE("canonical partition groups by objective value") {
  auto problem = make_problem("leadingones", 4);
  auto part = canonical_partition(problem, false);
  CHECK(part.kind() == LevelPartition::Kind::canonical);
  CHECK(part.num_intermediate() == 4);
  CHECK(part.target_level() == 5);
  for (int v = 0; v < 4; ++v) CHECK(part.level_value(v + 1) == v);

  CHECK(part.level_of(Bitstring(4)) == 1);
  CHECK(part.level_of(Bitstring::from_index(4, 0b1011)) == 3);  // two leading ones
  CHECK(part.level_of(Bitstring::all_ones(4)) == 5);
  CHECK(part.in_target(Bitstring::all_ones(4), problem->evaluate_raw(Bitstring::all_ones(4))));
}

TEST_CASE("constrained problems need the infeasible ground level") {
  auto problem = make_problem("balas", 4, 2);
  CHECK_THROWS_AS(canonical_partition(problem, false), std::invalid_argument);

  auto part = canonical_partition(problem, true);
  CHECK(part.kind() == LevelPartition::Kind::canonical_with_infeasible_a0);
  // Values 1..3; target value 3 -> intermediate 1,2.
  CHECK(part.num_intermediate() == 2);
  CHECK(part.level_of(Bitstring(4)) == 0);                           // infeasible
  CHECK(part.level_of(Bitstring::all_ones(4)) == 1);                 // value 1
  CHECK(part.level_of(Bitstring::from_index(4, 0b0111)) == 2);       // value 2
  CHECK(part.level_of(Bitstring::from_index(4, 0b0011)) == 3);       // optimum
}

TEST_CASE("custom target threshold truncates the ladder") {
  auto problem = make_problem("onemax", 3);
  auto part = canonical_partition(problem, false, 2);
  CHECK(part.num_intermediate() == 2);  // values 0,1
  CHECK(part.level_of(Bitstring::from_index(3, 0b011)) == 3);  // value 2 is already target
  CHECK(part.level_of(Bitstring::all_ones(3)) == 3);
  CHECK_THROWS_AS(canonical_partition(problem, false, 0), std::invalid_argument);  // no ladder
}

TEST_CASE("local optima partition with unit radius") {
  auto problem = make_problem("onemax", 6);
  auto part = local_optima_partition(problem, NeighborhoodSpec{1});
  CHECK(part.kind() == LevelPartition::Kind::local_optima);
  // Only the optimum is locally optimal, so values 0..5 remain as rungs.
  CHECK(part.num_intermediate() == 6);
  CHECK(part.level_of(Bitstring::all_ones(6)) == 7);
  CHECK(part.level_of(Bitstring(6)) == 1);
  CHECK(part.level_of(Bitstring::from_index(6, 0b010110)) == 4);
}

TEST_CASE("lazy and eager local-optima targets agree") {
  auto problem = make_problem("leadingones", 8);
  auto eager = local_optima_partition(problem, NeighborhoodSpec{1}, false);
  auto lazy = local_optima_partition(problem, NeighborhoodSpec{1}, true);
  for (std::uint64_t v = 0; v < 256; ++v) {
    Bitstring x = Bitstring::from_index(8, v);
    Evaluation e = problem->evaluate_raw(x);
    CHECK(eager.in_target(x, e) == lazy.in_target(x, e));
  }
  CHECK(eager.level_of(Bitstring::all_ones(8)) == eager.target_level());
}

TEST_CASE("membership escape hatch bounds its output") {
  auto problem = make_problem("onemax", 3);
  auto part = LevelPartition::from_membership(
      problem, 1, [](const Bitstring& x, const Evaluation&) { return x.get(0) ? 2 : 1; });
  CHECK(part.num_intermediate() == 1);
  CHECK(part.level_of(Bitstring(3)) == 1);
  CHECK(part.level_of(Bitstring::all_ones(3)) == 2);
}

TEST_CASE("population size floor evaluates the ceiling formula") {
  // 2*(1 + ln 10) / (0.1 * 0.5 * 0.5 * 1.5) = 176.14 -> 177.
  CHECK(lambda_lower_bound(10, 0.1, 0.5, 0.5) == 177);
  CHECK(lambda_lower_bound(1, 1.0, 1.0, 1.0) == 2);

  Rng rng(99);
  for (int i = 0; i < 100; ++i) {
    const int m = 1 + static_cast<int>(rng.next_below(200));
    const double s = 0.001 + 0.999 * rng.next_double();
    const double eps = 0.001 + 0.999 * rng.next_double();
    const double beta = 0.001 + 0.998 * rng.next_double();
    const long double exact =
        2.0L * (1.0L + std::log(static_cast<long double>(m))) /
        (static_cast<long double>(s) * eps * beta * (2.0L - beta));
    const long expect = static_cast<long>(std::ceil(static_cast<double>(exact)));
    CHECK(lambda_lower_bound(m, s, eps, beta) == std::max(expect, 2L));
  }
  CHECK_THROWS_AS(lambda_lower_bound(0, 0.1, 0.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(lambda_lower_bound(10, 0.0, 0.5, 0.5), std::invalid_argument);
}

TEST_CASE("upgrade probability estimator brackets the closed form") {
  auto problem = make_problem("leadingones", 4);
  auto part = canonical_partition(problem, false);
  MutationSpec mutation{MutationSpec::Kind::bitwise, 0.25};
  Rng rng(7);
  auto est = estimate_s_star(part, mutation, make_level_sampler(part), 8, 4000, rng);
  CHECK(est.complete);
  CHECK(est.skipped_levels.empty());
  REQUIRE(est.per_level.size() == 4);
  // Worst level is the last rung: flip the one missing gene, keep the rest.
  const double truth = 0.25 * std::pow(0.75, 3);
  CHECK(est.s_star > truth - 5 * est.radius);
  CHECK(est.s_star < truth + 5 * est.radius);
  for (const auto& lvl : est.per_level) CHECK(lvl.min_estimate >= est.s_star);
}

TEST_CASE("estimator reports unreachable levels") {
  auto problem = make_problem("onemax", 6);
  auto part = canonical_partition(problem, false);
  MutationSpec mutation{MutationSpec::Kind::bitwise, 1.0 / 6};
  LevelSampler sampler = [](int level, Rng&) -> std::optional<Bitstring> {
    if (level == 3) return std::nullopt;
    return Bitstring::from_index(6, (1ull << (level - 1)) - 1);
  };
  Rng rng(3);
  auto est = estimate_s_star(part, mutation, sampler, 2, 200, rng);
  CHECK_FALSE(est.complete);
  REQUIRE(est.skipped_levels.size() == 1);
  CHECK(est.skipped_levels[0] == 3);
}

TEST_CASE("monotonicity holds on value-ordered levels") {
  auto problem = make_problem("leadingones", 6);
  auto part = canonical_partition(problem, false);
  auto report = check_monotonicity(part, MonotonicityMode::exhaustive);
  CHECK(report.ok);
  CHECK(report.exhaustive);
  CHECK_FALSE(report.witness.has_value());
}

TEST_CASE("monotonicity violations produce a witness") {
  auto problem = make_problem("onemax", 4);
  // Swap the order of values 0 and 1: level 1 holds value 1, level 2 value 0.
  auto part = LevelPartition::from_membership(
      problem, 2, [problem](const Bitstring& x, const Evaluation& e) {
        if (e.objective >= 2) return 3;
        return e.objective == 1 ? 1 : 2;
      });
  auto report = check_monotonicity(part, MonotonicityMode::exhaustive);
  CHECK_FALSE(report.ok);
  CHECK(report.exhaustive);
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->lower_level == 1);
  auto lower_eval = problem->evaluate_raw(report.witness->lower);
  auto higher_eval = problem->evaluate_raw(report.witness->higher);
  CHECK(fitness_key(higher_eval) <= fitness_key(lower_eval));

  Rng rng(5);
  auto sampled = check_monotonicity(part, MonotonicityMode::sampled, 5000, &rng);
  CHECK_FALSE(sampled.ok);
  CHECK_FALSE(sampled.exhaustive);
}

TEST_CASE("condition report assembles the guarantee inputs") {
  const int n = 8;
  auto problem = make_problem("leadingones", n);
  auto part = canonical_partition(problem, false);
  FitnessMapping mapping;
  SelectionSpec selection{SelectionSpec::Kind::tournament, 0, 1, 1.0};
  CrossoverSpec crossover{CrossoverSpec::Kind::single_point, 1.0, 2};

  const double s = (1.0 / n) * std::pow(1.0 - 1.0 / n, n - 1);
  const double beta0 = 1.0 - 1.0 / std::numbers::e;
  ConditionInputs inputs;
  inputs.s_star = s;
  inputs.p1 = 1.0;
  inputs.epsilon = 0.5;

  const long required = lambda_lower_bound(n, s, 0.5, beta0);
  selection.k = static_cast<int>(required);

  auto report = build_condition_report(part, mapping, selection, crossover,
                                       static_cast<int>(required), inputs);
  CHECK(report.m == n);
  CHECK(report.s_star == doctest::Approx(s));
  CHECK(report.epsilon == doctest::Approx(0.5));
  CHECK(report.beta0 == doctest::Approx(beta0));
  CHECK(report.beta0_certified);
  CHECK(report.lambda_required == required);
  CHECK(report.lambda_configured == required);
  CHECK(report.lambda_ok);
  CHECK(report.success_floor == doctest::Approx(1.0 / std::numbers::e));

  // Keeping the pressure ratio at one, a population one short misses the floor.
  SelectionSpec short_selection = selection;
  short_selection.k = static_cast<int>(required) - 1;
  auto short_report = build_condition_report(part, mapping, short_selection, crossover,
                                             static_cast<int>(required) - 1, inputs);
  CHECK_FALSE(short_report.lambda_ok);

  ConditionInputs missing;
  missing.p1 = 1.0;
  missing.epsilon = 0.5;
  CHECK_THROWS_AS(build_condition_report(part, mapping, selection, crossover, 4, missing),
                  std::invalid_argument);
}

TEST_CASE("uncertified pressure configurations are flagged") {
  auto problem = make_problem("leadingones", 6);
  auto part = canonical_partition(problem, false);
  ConditionInputs inputs;
  inputs.s_star = 0.05;
  inputs.p1 = 1.0;
  inputs.epsilon = 0.5;
  // Proportional selection on raw fitness never reaches its floor.
  SelectionSpec prop{SelectionSpec::Kind::proportional, 2, 1, 1.0};
  CrossoverSpec crossover{CrossoverSpec::Kind::single_point, 0.5, 2};
  auto report = build_condition_report(part, FitnessMapping{}, prop, crossover, 64, inputs);
  CHECK_FALSE(report.beta0_certified);
  CHECK_FALSE(report.notes.empty());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "levelga/experiment.hpp"
#include "levelga/problems.hpp"
#include "levelga/stats.hpp"

using namespace levelga;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/levelga_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

ExperimentSpec tiny_spec() {
  ExperimentSpec spec;
  spec.problem = "leadingones";
  spec.n = 6;
  spec.lambda = "8";
  spec.k = 8;
  spec.pc = 1.0;
  spec.pm = 1.0 / 6;
  spec.trials = 6;
  spec.seed = 9;
  spec.threads = 1;
  return spec;
}

}  // namespace

TEST_CASE("normal quantiles") {
  CHECK(normal_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(normal_quantile(0.975) == doctest::Approx(1.9599639845).epsilon(1e-7));
  CHECK(normal_quantile(0.995) == doctest::Approx(2.5758293035).epsilon(1e-7));
  CHECK(normal_quantile(0.025) == doctest::Approx(-1.9599639845).epsilon(1e-7));
  CHECK(two_sided_z(0.99) == doctest::Approx(2.5758293035).epsilon(1e-7));
  CHECK(two_sided_z(0.95) == doctest::Approx(1.9599639845).epsilon(1e-7));
  CHECK_THROWS_AS((void)normal_quantile(0.0), std::invalid_argument);
  CHECK_THROWS_AS((void)two_sided_z(1.0), std::invalid_argument);
}

TEST_CASE("binomial radius") {
  const double r = binomial_confidence_radius(0.5, 10000, 0.99);
  CHECK(r == doctest::Approx(2.5758293035 * 0.005).epsilon(1e-6));
  CHECK(binomial_confidence_radius(0.0, 100, 0.99) == 0.0);
}

TEST_CASE("mean interval needs two samples") {
  CHECK_FALSE(mean_confidence_interval({5.0}, 0.99).defined);
  auto mi = mean_confidence_interval({2.0, 4.0, 6.0, 8.0}, 0.95);
  CHECK(mi.defined);
  CHECK(mi.mean == doctest::Approx(5.0));
  CHECK(mi.lo < 5.0);
  CHECK(mi.hi > 5.0);
  CHECK(mi.count == 4);
}

TEST_CASE("line fit recovers exact coefficients") {
  auto fit = fit_line({1.0, 2.0, 3.0, 4.0}, {5.0, 7.0, 9.0, 11.0});
  CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("config keys route and reject") {
  ExperimentSpec spec;
  apply_spec_key(spec, "problem", "balas");
  apply_spec_key(spec, "n", "12");
  apply_spec_key(spec, "pc", "0.25");
  apply_spec_key(spec, "multistart", "true");
  apply_spec_key(spec, "t_max", "m");
  apply_spec_key(spec, "seed", "42");
  CHECK(spec.problem == "balas");
  CHECK(spec.n == 12);
  CHECK(spec.pc == doctest::Approx(0.25));
  CHECK(spec.multistart);
  CHECK(spec.t_max == "m");
  CHECK(spec.seed == 42);
  CHECK_THROWS_AS(apply_spec_key(spec, "nonsense", "1"), std::invalid_argument);
  CHECK_THROWS_AS(apply_spec_key(spec, "n", "twelve"), std::invalid_argument);
  CHECK_THROWS_AS(apply_spec_key(spec, "seed", "-3"), std::invalid_argument);
  CHECK_THROWS_AS(apply_spec_key(spec, "multistart", "maybe"), std::invalid_argument);
}

TEST_CASE("config file parsing") {
  TempFile f("spec.cfg");
  {
    std::ofstream out(f.path);
    out << "# loadable flat config\n"
        << "problem = leadingones\n"
        << "n = 8\n"
        << "\n"
        << "lambda = auto   # trailing comment\n"
        << "pc = 1\n";
  }
  ExperimentSpec spec = load_spec(f.path);
  CHECK(spec.problem == "leadingones");
  CHECK(spec.n == 8);
  CHECK(spec.lambda == "auto");
  CHECK(spec.pc == doctest::Approx(1.0));

  TempFile bad("bad.cfg");
  {
    std::ofstream out(bad.path);
    out << "problem = onemax\nnot a key value line\n";
  }
  CHECK_THROWS_AS(load_spec(bad.path), std::invalid_argument);
  CHECK_THROWS_AS(load_spec("/tmp/levelga_no_such_file.cfg"), std::invalid_argument);
}

TEST_CASE("resolution fills the certified configuration") {
  ExperimentSpec spec;
  spec.problem = "leadingones";
  spec.n = 8;
  spec.lambda = "auto";
  spec.k = 0;
  spec.pc = 1.0;
  spec.trials = 2;
  ResolvedExperiment rx = resolve_experiment(spec);

  const double s = (1.0 / 8) * std::pow(7.0 / 8, 7);
  const double beta0 = 1.0 - 1.0 / std::numbers::e;
  CHECK(rx.conditions.s_star == doctest::Approx(s));
  CHECK_FALSE(rx.conditions.s_star_estimated);
  CHECK(rx.conditions.epsilon == doctest::Approx(0.5));
  CHECK(rx.conditions.beta0 == doctest::Approx(beta0));
  CHECK(rx.conditions.p1 == 1.0);
  CHECK(rx.p1_floor == 1.0);
  CHECK(rx.conditions.lambda_ok);
  CHECK(rx.ga.lambda % 2 == 0);  // paired offspring
  CHECK(rx.ga.lambda >= rx.conditions.lambda_required);
  CHECK(rx.ga.selection.k == rx.ga.lambda);  // k = ceil(alpha * lambda), alpha = 1
  CHECK(rx.spec.lambda == std::to_string(rx.ga.lambda));
  CHECK(rx.ga.mutation.pm == doctest::Approx(1.0 / 8));
}

TEST_CASE("resolution scales proportional fitness past the threshold") {
  ExperimentSpec spec;
  spec.problem = "balas";
  spec.n = 8;
  spec.selection = "proportional";
  spec.nu = "auto";
  spec.lambda = "auto";
  spec.pc = 0.5;
  spec.t_max = "m";
  spec.multistart = true;
  spec.trials = 2;
  ResolvedExperiment rx = resolve_experiment(spec);

  CHECK(rx.spec.p == 4);
  CHECK(rx.conditions.s_star_estimated);
  CHECK(rx.conditions.s_star > 0.0);
  CHECK(rx.conditions.epsilon == doctest::Approx(0.5));  // 1 - pc
  CHECK(rx.conditions.beta0 == doctest::Approx(0.5));
  CHECK(rx.p1_floor == doctest::Approx(0.5));  // half the cube covers at p = n/2
  CHECK(rx.conditions.p1 == doctest::Approx(1.0 - std::pow(0.5, rx.ga.lambda)));
  CHECK(rx.mapping.scaling == FitnessMapping::Scaling::power);
  const double threshold = std::log(static_cast<double>(rx.ga.lambda)) * 5;  // f_star = 5
  CHECK(rx.mapping.nu == doctest::Approx(threshold * 1.01));
  REQUIRE(rx.ga.t_max.has_value());
  CHECK(*rx.ga.t_max == 4);  // one generation per level
  CHECK(rx.ga.multistart);
}

TEST_CASE("resolution rejects contradictions") {
  ExperimentSpec spec = tiny_spec();
  spec.lambda = "7";  // odd with paired offspring
  CHECK_THROWS_AS(resolve_experiment(spec), std::invalid_argument);
  spec = tiny_spec();
  spec.trials = 0;
  CHECK_THROWS_AS(resolve_experiment(spec), std::invalid_argument);
  spec = tiny_spec();
  spec.confidence = 1.0;
  CHECK_THROWS_AS(resolve_experiment(spec), std::invalid_argument);
  spec = tiny_spec();
  spec.r = 3;
  CHECK_THROWS_AS(resolve_experiment(spec), std::invalid_argument);
  spec = tiny_spec();
  spec.lambda = "auto";  // explicit k contradicts auto sizing
  CHECK_THROWS_AS(resolve_experiment(spec), std::invalid_argument);
  spec = tiny_spec();
  spec.partition = "nosuch";
  CHECK_THROWS_AS(resolve_experiment(spec), std::invalid_argument);
}

TEST_CASE("experiment csv is stable and schema-exact") {
  TempFile csv1("run1.csv"), csv2("run2.csv");
  ExperimentSpec spec = tiny_spec();
  spec.out_csv = csv1.path;
  ExperimentResult res = run_experiment(spec);
  spec.out_csv = csv2.path;
  (void)run_experiment(spec);

  const std::string a = slurp(csv1.path);
  CHECK(a == slurp(csv2.path));

  std::istringstream lines(a);
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "experiment_id,problem,n,lambda,selection,sel_param,crossover,pc,r,mutation,pm,"
        "partition,trial,seed,hit,T,generations,restarts,best_objective");
  long rows = 0;
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    ++rows;
    long commas = std::count(line.begin(), line.end(), ',');
    CHECK(commas == 18);
  }
  CHECK(rows == spec.trials);

  // Aggregation is trial-order independent: single- and multi-thread agree.
  ExperimentSpec threaded = tiny_spec();
  threaded.threads = 3;
  TempFile csv3("run3.csv");
  threaded.out_csv = csv3.path;
  (void)run_experiment(threaded);
  CHECK(slurp(csv3.path) == a);

  CHECK(res.bound.trials == spec.trials);
  CHECK(res.bound.hits == spec.trials);  // this configuration always hits
  CHECK(res.bound.bound == doctest::Approx(std::numbers::e * 6 * 8));
}

TEST_CASE("a certified configuration respects its bound") {
  ExperimentSpec spec;
  spec.problem = "leadingones";
  spec.n = 4;
  spec.lambda = "auto";
  spec.pc = 1.0;
  spec.pm = 0.25;
  spec.trials = 24;
  spec.seed = 123;
  spec.threads = 1;
  ExperimentResult res = run_experiment(spec);
  CHECK(res.conditions.lambda_ok);
  CHECK(res.bound.hits == spec.trials);
  CHECK(res.bound.verdict == "bound-respected");
  CHECK(res.bound.mean <= res.bound.bound);
}

TEST_CASE("json reports carry the verdict and conditions") {
  ExperimentSpec spec = tiny_spec();
  ExperimentResult res = run_experiment(spec);
  const std::string js = to_json_string(res);
  CHECK(js.find("\"verdict\"") != std::string::npos);
  CHECK(js.find("\"lambda_required\"") != std::string::npos);
  CHECK(js.find("\"bound\"") != std::string::npos);
  CHECK(js.find("\"provenance\"") != std::string::npos);
}

TEST_CASE("one trial cannot produce an interval") {
  ExperimentSpec spec = tiny_spec();
  spec.trials = 1;
  ExperimentResult res = run_experiment(spec);
  CHECK(res.bound.verdict == "inconclusive");
}

TEST_CASE("a zero mutation rate cannot certify an upgrade floor") {
  ExperimentSpec spec = tiny_spec();
  spec.pm = 0.0;
  CHECK_THROWS_AS(resolve_experiment(spec), std::invalid_argument);
}

TEST_CASE("heavy censoring voids the verdict") {
  ExperimentSpec spec = tiny_spec();
  spec.pm = 0.001;  // mutation almost never moves, so the budget runs out
  spec.max_evaluations = 400;
  ExperimentResult res = run_experiment(spec);
  // Hitting is still possible in the random initial population, but most
  // trials stall; censoring beyond one percent voids the comparison.
  CHECK(res.bound.censored > 0);
  CHECK(res.bound.verdict == "inconclusive");
  CHECK_FALSE(res.bound.note.empty());
}

TEST_CASE("multistart bound uses the initial-coverage floor") {
  ExperimentSpec spec;
  spec.problem = "balas";
  spec.n = 8;
  spec.selection = "tournament";
  spec.lambda = "16";
  spec.k = 16;
  spec.pc = 0.5;
  spec.t_max = "m";
  spec.multistart = true;
  spec.trials = 8;
  spec.seed = 5;
  spec.threads = 1;
  ExperimentResult res = run_experiment(spec);
  CHECK(res.bound.p1_used == doctest::Approx(0.5));
  CHECK(res.bound.bound == doctest::Approx(std::numbers::e * 4 * 16 / 0.5));
  CHECK(res.bound.provenance.find("multistart") != std::string::npos);
}

TEST_CASE("sweeps need at least two sizes and derive their own thresholds") {
  ExperimentSpec base = tiny_spec();
  CHECK_THROWS_AS(verify_bounds(base, {8}), std::invalid_argument);
  ExperimentSpec balas = tiny_spec();
  balas.problem = "balas";
  balas.p = 3;
  CHECK_THROWS_AS(verify_bounds(balas, {6, 8}), std::invalid_argument);
}

TEST_CASE("sweep aggregates per-size runs") {
  TempFile csv("sweep.csv"), js("sweep.json");
  ExperimentSpec base = tiny_spec();
  base.pm = -1.0;  // re-derive 1/n per size
  base.out_csv = csv.path;
  base.out_json = js.path;
  SweepResult sweep = verify_bounds(base, {6, 8, 10});
  REQUIRE(sweep.sizes.size() == 3);
  CHECK(sweep.sizes[0].spec.n == 6);
  CHECK(sweep.sizes[2].spec.n == 10);
  CHECK(sweep.slope_defined);
  CHECK(sweep.slope > 0.0);  // hitting times grow with n
  // Distinct per-size seeds, all derived from the master.
  CHECK(sweep.sizes[0].spec.seed != sweep.sizes[1].spec.seed);

  const std::string csv_text = slurp(csv.path);
  CHECK(csv_text.find("experiment_id") == 0);
  CHECK(csv_text.find("experiment_id", 10) == std::string::npos);  // header only once
  const std::string js_text = slurp(js.path);
  CHECK(js_text.find("\"slope\"") != std::string::npos);
}

TEST_CASE("condition checking pairs the report with monotonicity") {
  ExperimentSpec spec;
  spec.problem = "leadingones";
  spec.n = 8;
  spec.lambda = "auto";
  spec.pc = 1.0;
  ConditionsResult res = check_conditions(spec);
  CHECK(res.report.lambda_ok);
  CHECK(res.monotonicity.ok);
  CHECK(res.monotonicity.exhaustive);  // n <= 16 enumerates the cube
  const std::string js = to_json_string(res);
  CHECK(js.find("\"monotonicity\"") != std::string::npos);

  ExperimentSpec big = spec;
  big.n = 20;
  big.pm = 0.05;
  ConditionsResult sampled = check_conditions(big);
  CHECK(sampled.monotonicity.ok);
  CHECK_FALSE(sampled.monotonicity.exhaustive);
}

TEST_CASE("lambda below the floor is flagged but runnable") {
  ExperimentSpec spec = tiny_spec();
  spec.lambda = "4";
  spec.k = 4;
  spec.trials = 3;
  ExperimentResult res = run_experiment(spec);
  CHECK_FALSE(res.conditions.lambda_ok);
  CHECK(res.bound.trials == 3);
}

TEST_CASE("balas initial coverage floor") {
  // At p = n/2 covers are exactly half the cube.
  ExperimentSpec spec;
  spec.problem = "balas";
  spec.n = 12;
  spec.lambda = "8";
  spec.pc = 0.5;
  spec.trials = 2;
  spec.t_max = "m";
  spec.multistart = true;
  ResolvedExperiment rx = resolve_experiment(spec);
  CHECK(rx.p1_floor == doctest::Approx(0.5));

  // Away from the midpoint the floor is the exact binomial tail.
  ExperimentSpec off;
  off.problem = "balas";
  off.n = 6;
  off.p = 2;
  off.lambda = "8";
  off.pc = 0.5;
  off.trials = 2;
  off.t_max = "m";
  off.multistart = true;
  ResolvedExperiment rx2 = resolve_experiment(off);
  // P(|ones| >= 2) over 64 equiprobable genotypes: 1 - (1 + 6)/64.
  CHECK(rx2.p1_floor == doctest::Approx(57.0 / 64.0).epsilon(1e-12));
}

#include "doctest.h"

#include <cmath>
#include <sstream>

#include "critlab/errors.hpp"
#include "critlab/harness.hpp"

using namespace critlab;

namespace {

ExperimentSpec small_spec(Model model, std::vector<std::string> stats) {
  ExperimentSpec s;
  s.name = "small";
  s.model = model;
  s.sizes = {8, 16};
  s.trials = 6;
  s.seed = 77;
  s.statistics = std::move(stats);
  return s;
}

}  // namespace

TEST_CASE("single cell report") {
  ExperimentSpec s = small_spec(Model::IidUniform, {"radial_deficit"});
  s.sizes = {4};
  s.trials = 1;
  ConvergenceReport r = run_experiment(s);
  REQUIRE(r.cells.size() == 1);
  CHECK(r.cells[0].count == 1);
  CHECK(r.cells[0].q50 >= 0.0);
  CHECK(r.cells[0].q50 <= 1.0);
}

TEST_CASE("reports are deterministic across runs and thread counts") {
  ExperimentSpec s = small_spec(Model::ConjugatePairs,
                                {"radial_deficit", "condition_i", "condition_ii", "abs_log_L",
                                 "crit_trig_moment_2", "gauss_lucas_violations"});
  const std::string one = to_json(run_experiment(s, {1})).dump();
  const std::string again = to_json(run_experiment(s, {1})).dump();
  const std::string four = to_json(run_experiment(s, {4})).dump();
  CHECK(one == again);
  CHECK(one == four);
}

TEST_CASE("every model runs") {
  for (Model m : {Model::HaarO, Model::HaarSO, Model::HaarU, Model::HaarSp, Model::Wigner,
                  Model::GinibreReal, Model::IidUniform, Model::ConjugatePairs, Model::Kac}) {
    ExperimentSpec s = small_spec(m, {"radial_deficit", "root_trig_moment_1"});
    if (m == Model::Wigner) s.statistics = {"levy_semicircle", "levy_roots_critical"};
    if (m == Model::Kac) s.statistics.push_back("annulus_fraction_k2");
    CAPTURE(to_string(m));
    ConvergenceReport r = run_experiment(s);
    CHECK_NOTHROW(validate_report(r));
    CHECK(r.cells.size() == s.statistics.size() * s.sizes.size());
    CHECK(parse_model(to_string(m)) == m);
  }
}

TEST_CASE("radial deficit shrinks for unitary spectra") {
  ExperimentSpec s = small_spec(Model::HaarU, {"radial_deficit", "gauss_lucas_violations"});
  s.sizes = {25, 50, 100, 200};
  s.trials = 50;
  s.seed = 26001;
  ConvergenceReport r = run_experiment(s);
  CHECK(r.trends.at("radial_deficit") == Verdict::Decreasing);
  for (std::size_t n : s.sizes) CHECK(r.cell("gauss_lucas_violations", n).max == 0.0);
}

TEST_CASE("trend verdicts") {
  CHECK(trend_of({0.4, 0.2, 0.1}) == Verdict::Decreasing);
  CHECK(trend_of({0.1, 0.1}) == Verdict::Flat);
  CHECK(trend_of({0.1, 0.3}) == Verdict::Increasing);
  CHECK(trend_of({0.1, 0.105, 0.095}) == Verdict::Flat);

  ExperimentSpec s = small_spec(Model::IidUniform, {"radial_deficit"});
  ConvergenceReport r = run_experiment(s);
  CHECK_THROWS_AS(trend_check(r, "nope"), LookupError);
  CHECK(trend_check(r, "radial_deficit") == r.trends.at("radial_deficit"));
}

TEST_CASE("grid statistics expand per point") {
  ExperimentSpec s = small_spec(Model::IidUniform, {"condition_ii"});
  s.z_grid = std::vector<cplx>{0.1, cplx(0, 0.5)};
  std::vector<std::string> keys = statistic_keys(s);
  CHECK(keys == std::vector<std::string>{"condition_ii@z0", "condition_ii@z1"});
}

TEST_CASE("spec validation names the bad field") {
  auto message = [](const ExperimentSpec& s) {
    try {
      validate(s);
    } catch (const ContractViolation& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  ExperimentSpec s = small_spec(Model::HaarU, {"radial_deficit"});
  CHECK(message(s).empty());

  ExperimentSpec bad = s;
  bad.sizes = {16, 8};
  CHECK(message(bad).find("sizes") != std::string::npos);
  bad = s;
  bad.trials = 0;
  CHECK(message(bad).find("trials") != std::string::npos);
  bad = s;
  bad.model = Model::HaarSp;
  bad.sizes = {8, 15};
  CHECK(message(bad).find("sizes") != std::string::npos);
  bad = s;
  bad.statistics = {"wobble"};
  CHECK(message(bad).find("statistics") != std::string::npos);
  bad = s;
  bad.z_grid = std::vector<cplx>{1.5};
  CHECK(message(bad).find("z_grid") != std::string::npos);
}

TEST_CASE("spec json round trip") {
  ExperimentSpec s = small_spec(Model::Kac, {"annulus_fraction_k1"});
  s.kac_law = CoefficientLaw::Rademacher;
  s.z_grid = std::vector<cplx>{cplx(0.1, -0.2)};
  ExperimentSpec back = spec_from_json(to_json(s));
  CHECK(to_json(back).dump() == to_json(s).dump());
  CHECK_THROWS_AS(spec_from_json(nlohmann::json::parse(R"({"model": "haar_u"})")),
                  ContractViolation);
}

TEST_CASE("report invariants and raw export") {
  ExperimentSpec s = small_spec(Model::HaarO, {"radial_deficit"});
  ConvergenceReport r = run_experiment(s);
  for (const CellSummary& c : r.cells) {
    CHECK(c.q10 <= c.q50);
    CHECK(c.q50 <= c.q90);
    CHECK(c.count == s.trials);
  }
  CHECK(r.values("radial_deficit", 8).size() == s.trials);
  std::ostringstream csv;
  write_raw_csv(csv, r);
  CHECK(csv.str().rfind("stat,size,trial,value\n", 0) == 0);

  ConvergenceReport broken = r;
  broken.cells[0].q10 = broken.cells[0].q90 + 1.0;
  CHECK_THROWS_AS(validate_report(broken), ContractViolation);
}

TEST_CASE("quantiles") {
  CHECK(quantile({3.0, 1.0, 2.0}, 0.5) == 2.0);
  CHECK(quantile({0.0, 10.0}, 0.1) == doctest::Approx(1.0));
  CHECK(quantile({5.0}, 0.9) == 5.0);
}

TEST_CASE("trace CLT experiment") {
  std::vector<double> d = clt_trace_experiment(GroupKind::Unitary, 64, 3, 2000, 8001);
  REQUIRE(d.size() == 3);
  for (double x : d) CHECK(x < 0.1);
  CHECK(gaussian_control_distance(0.5, 2000, 8002) < 0.05);
  CHECK(trace_limit_variance(GroupKind::Unitary, 3) == 1.5);
  CHECK(trace_limit_variance(GroupKind::Symplectic, 3) == 3.0);
  CHECK_THROWS_AS(clt_trace_experiment(GroupKind::Unitary, 8, 2, 10, 1), ContractViolation);
}

TEST_CASE("failed trials abort with context") {
  CHECK_THROWS_AS(parallel_for(5, 2,
                               [](std::size_t i) {
                                 if (i == 3) throw NumericFailure("boom", 3);
                               }),
                  NumericFailure);

  try {
    parallel_for(4, 1, [](std::size_t i) {
      if (i >= 2) throw NumericFailure("trial " + std::to_string(i), 7);
    });
    FAIL("expected a failure");
  } catch (const NumericFailure& e) {
    // lowest failing index wins regardless of scheduling
    CHECK(std::string(e.what()).find("trial 2") != std::string::npos);
    CHECK(e.dim() == 7);
  }
}

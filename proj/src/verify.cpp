#include "critlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include "critlab/conditions.hpp"
#include "critlab/eigen.hpp"
#include "critlab/ensembles.hpp"
#include "critlab/errors.hpp"
#include "critlab/harness.hpp"
#include "critlab/measures.hpp"
#include "critlab/polynomials.hpp"
#include "critlab/root_models.hpp"

namespace critlab {

namespace {

std::string num(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

CheckResult check(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok, std::move(detail)};
}

RootForm random_disk_roots(std::size_t degree, RngStream& rng) {
  RootForm p;
  for (std::size_t i = 0; i < degree; ++i) {
    const double r = std::sqrt(rng.uniform());
    p.roots.push_back(std::polar(r, kTwoPi * rng.uniform()));
  }
  return p;
}

std::vector<CheckResult> suite_groups(std::uint64_t seed) {
  std::vector<CheckResult> out;
  for (GroupKind kind : {GroupKind::Orthogonal, GroupKind::SpecialOrthogonal, GroupKind::Unitary,
                         GroupKind::Symplectic}) {
    double worst_ratio = 0.0;
    double worst_det = 0.0;
    double worst_circle = 0.0;
    for (std::size_t n : {2, 4, 8, 16, 32}) {
      for (std::uint64_t t = 0; t < 5; ++t) {
        RngStream rng(seed, mix_stream(n, t));
        const SquareMatrix m = haar_sample(kind, n, rng);
        worst_ratio = std::max(worst_ratio, membership_residual(m, kind) / (1e-10 * n));
        if (kind == GroupKind::SpecialOrthogonal) {
          worst_det = std::max(worst_det, std::abs(determinant(m) - cplx(1.0)));
        }
        for (const auto& z : eigenvalues(m).values) {
          worst_circle = std::max(worst_circle, std::abs(std::abs(z) - 1.0));
        }
      }
    }
    const std::string tag(to_string(kind));
    out.push_back(check("membership_" + tag, worst_ratio <= 1.0,
                        "max residual / (1e-10 n) = " + num(worst_ratio)));
    out.push_back(check("unit_circle_" + tag, worst_circle <= 1e-8,
                        "max ||lambda| - 1| = " + num(worst_circle)));
    if (kind == GroupKind::SpecialOrthogonal) {
      out.push_back(check("determinant_special_orthogonal", worst_det <= 1e-10,
                          "max |det - 1| = " + num(worst_det)));
    }
  }

  // |M_11|^2 has mean 1/n under Haar U(n), also after a fixed left rotation.
  const std::size_t n = 4;
  const std::size_t trials = 4000;
  RngStream vrng(seed, 0x7631);
  const SquareMatrix v = haar_sample(GroupKind::Unitary, n, vrng);
  double sum_plain = 0.0;
  double sum_rot = 0.0;
  double sum_sq = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    RngStream rng(seed, mix_stream(0x6c656674, t));
    const SquareMatrix m = haar_sample(GroupKind::Unitary, n, rng);
    const double a = std::norm(m(0, 0));
    const double b = std::norm((v * m)(0, 0));
    sum_plain += a;
    sum_sq += a * a;
    sum_rot += b;
  }
  const double mean_plain = sum_plain / trials;
  const double mean_rot = sum_rot / trials;
  const double sd = std::sqrt(sum_sq / trials - mean_plain * mean_plain);
  const double se = sd / std::sqrt(static_cast<double>(trials));
  const double target = 1.0 / static_cast<double>(n);
  out.push_back(check("left_invariance_unitary",
                      std::abs(mean_plain - target) <= 5 * se && std::abs(mean_rot - target) <= 5 * se,
                      "means " + num(mean_plain) + ", " + num(mean_rot) + " vs 1/n, se " + num(se)));
  return out;
}

std::vector<CheckResult> suite_gauss_lucas(std::uint64_t seed) {
  std::size_t violations = 0;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    RngStream rng(seed, mix_stream(0x676c, t));
    const std::size_t degree = 2 + static_cast<std::size_t>(rng.uniform() * 49.0);
    const RootForm p = random_disk_roots(degree, rng);
    if (!gauss_lucas_check(p, critical_points_from_roots(p), 1e-8)) ++violations;
  }
  std::size_t haar_violations = 0;
  for (GroupKind kind : {GroupKind::Unitary, GroupKind::Orthogonal}) {
    for (std::uint64_t t = 0; t < 20; ++t) {
      RngStream rng(seed, mix_stream(0x676c68, t));
      const RootForm p = char_poly_angles(haar_sample(kind, 60, rng), kind).roots();
      if (!gauss_lucas_check(p, critical_points_from_roots(p), 1e-8)) ++haar_violations;
    }
  }
  return {check("random_disk_polynomials", violations == 0,
                std::to_string(violations) + " violations over 1000 polynomials"),
          check("haar_characteristic_polynomials", haar_violations == 0,
                std::to_string(haar_violations) + " violations over 40 Haar samples")};
}

std::vector<CheckResult> suite_companion(std::uint64_t seed) {
  double worst = 0.0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    RngStream rng(seed, mix_stream(0x636f6d70, t));
    const std::size_t degree = 2 + static_cast<std::size_t>(rng.uniform() * 29.0);
    const RootForm p = random_disk_roots(degree, rng);
    const auto direct = critical_points_from_roots(p).points;
    const auto oracle = roots_from_coeffs(derivative(coeffs_from_roots(p))).roots;
    worst = std::max(worst, matching_distance(direct, oracle));
  }
  // J^m = (n-1)^{m-1} J for the all-ones J, in exact integers.
  bool ones_ok = true;
  for (std::int64_t size = 1; size <= 30 && ones_ok; ++size) {
    std::vector<std::int64_t> power(size * size, 1);
    for (int m = 2; m <= 5; ++m) {
      std::vector<std::int64_t> next(size * size, 0);
      for (std::int64_t i = 0; i < size; ++i)
        for (std::int64_t k = 0; k < size; ++k)
          for (std::int64_t j = 0; j < size; ++j) next[i * size + j] += power[i * size + k];
      power = std::move(next);
      std::int64_t expected = 1;
      for (int e = 0; e < m - 1; ++e) expected *= size;
      ones_ok = ones_ok && std::all_of(power.begin(), power.end(),
                                       [&](std::int64_t x) { return x == expected; });
    }
  }
  return {check("companion_vs_coefficient_route", worst <= 1e-6,
                "max matching distance " + num(worst)),
          check("all_ones_power_identity", ones_ok, "J^m = (n-1)^(m-1) J for n-1 <= 30, m <= 5")};
}

std::vector<CheckResult> suite_interlacing(std::uint64_t seed) {
  std::size_t worst = 0;
  for (std::uint64_t t = 0; t < 20; ++t) {
    RngStream rng(seed, mix_stream(0x696e74, t));
    const std::size_t n = 100;
    std::vector<double> eig = hermitian_eigenvalues(sample_wigner(n, rng));
    for (double& x : eig) x /= std::sqrt(static_cast<double>(n));
    RootForm p;
    for (double x : eig) p.roots.emplace_back(x, 0.0);
    std::vector<double> crit;
    for (const auto& y : critical_points_from_roots(p).points) crit.push_back(y.real());
    std::sort(crit.begin(), crit.end());
    for (int k = 0; k < 100; ++k) {
      double a = -2.5 + 5.0 * rng.uniform();
      double b = -2.5 + 5.0 * rng.uniform();
      if (a > b) std::swap(a, b);
      worst = std::max(worst, interlacing_defect(eig, crit, {a, b}));
    }
  }
  return {check("wigner_interlacing", worst <= 1,
                "max |N_I - N_I'| = " + std::to_string(worst) + " over 2000 intervals")};
}

double exhaustive_w1(const std::vector<double>& xs, std::vector<double> ys) {
  std::sort(ys.begin(), ys.end());
  double best = std::numeric_limits<double>::infinity();
  do {
    double s = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) s += std::abs(xs[k] - ys[k]);
    best = std::min(best, s / static_cast<double>(xs.size()));
  } while (std::next_permutation(ys.begin(), ys.end()));
  return best;
}

std::vector<CheckResult> suite_metrics(std::uint64_t seed) {
  std::vector<CheckResult> out;
  const double d03 = levy_distance(RealMeasure({0.0}), RealMeasure({0.3}));
  const double d5 = levy_distance(RealMeasure({0.0}), RealMeasure({5.0}));
  out.push_back(check("levy_point_masses", std::abs(d03 - 0.3) < 1e-9 && std::abs(d5 - 1.0) < 1e-9,
                      "L(d0,d0.3) = " + num(d03) + ", L(d0,d5) = " + num(d5)));

  double worst_triangle = 0.0;
  double worst_symmetry = 0.0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    RngStream rng(seed, mix_stream(0x6c6576, t));
    const auto draw = [&] {
      std::vector<double> v(1 + static_cast<std::size_t>(rng.uniform() * 8.0));
      for (auto& x : v) x = 2.0 * rng.uniform() - 1.0;
      return RealMeasure(v);
    };
    const RealMeasure a = draw();
    const RealMeasure b = draw();
    const RealMeasure c = draw();
    const double ab = levy_distance(a, b);
    worst_symmetry = std::max(worst_symmetry, std::abs(ab - levy_distance(b, a)));
    worst_triangle = std::max(worst_triangle, levy_distance(a, c) - ab - levy_distance(b, c));
  }
  out.push_back(check("levy_triangle_inequality", worst_triangle <= 1e-12,
                      "max excess " + num(worst_triangle)));
  out.push_back(check("levy_symmetry", worst_symmetry <= 1e-12, "max asymmetry " + num(worst_symmetry)));

  double worst_w = 0.0;
  for (std::uint64_t t = 0; t < 60; ++t) {
    RngStream rng(seed, mix_stream(0x7731, t));
    const std::size_t size = 1 + t % 6;
    std::vector<double> xs(size);
    std::vector<double> ys(size);
    for (auto& x : xs) x = rng.normal();
    for (auto& y : ys) y = rng.normal();
    worst_w = std::max(worst_w, std::abs(wasserstein1_empirical(xs, ys) - exhaustive_w1(xs, ys)));
  }
  out.push_back(check("wasserstein_exhaustive", worst_w <= 1e-12, "max gap " + num(worst_w)));

  // Composite Simpson in x = 2 sin(t), where the density becomes (2/pi) cos^2 t.
  double worst_cdf = 0.0;
  for (int k = 0; k <= 100; ++k) {
    const double x = -2.0 + 4.0 * k / 100.0;
    const double upper = std::asin(std::clamp(0.5 * x, -1.0, 1.0));
    const double lower = -0.5 * 3.14159265358979323846;
    const int steps = 2000;
    const double h = (upper - lower) / steps;
    double s = 0.0;
    for (int i = 0; i <= steps; ++i) {
      const double c = std::cos(lower + i * h);
      const double w = (i == 0 || i == steps) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      s += w * c * c;
    }
    const double integral = s * h / 3.0 * 2.0 / 3.14159265358979323846;
    worst_cdf = std::max(worst_cdf, std::abs(integral - semicircle_cdf(x)));
  }
  out.push_back(check("semicircle_cdf_quadrature", worst_cdf <= 1e-8, "max gap " + num(worst_cdf)));
  return out;
}

std::vector<CheckResult> suite_clt(std::uint64_t seed) {
  std::vector<CheckResult> out;
  const auto unitary = clt_trace_experiment(GroupKind::Unitary, 64, 3, 2000, seed);
  for (std::size_t j = 0; j < unitary.size(); ++j) {
    out.push_back(check("unitary_trace_j" + std::to_string(j + 1), unitary[j] < 0.1,
                        "W1 = " + num(unitary[j])));
  }
  const double control = gaussian_control_distance(0.5, 2000, seed);
  out.push_back(check("gaussian_control", control < 0.05, "W1 = " + num(control)));
  const auto corrected = clt_trace_experiment(GroupKind::Orthogonal, 64, 2, 500, seed, true);
  const auto raw = clt_trace_experiment(GroupKind::Orthogonal, 64, 2, 500, seed, false);
  out.push_back(check("orthogonal_even_correction", corrected[1] < raw[1],
                      "corrected " + num(corrected[1]) + " vs uncorrected " + num(raw[1])));
  return out;
}

std::vector<CheckResult> suite_convergence(std::uint64_t seed) {
  ExperimentSpec spec;
  spec.name = "verify_convergence";
  spec.model = Model::HaarU;
  spec.sizes = {25, 50, 100};
  spec.trials = 20;
  spec.seed = seed;
  spec.statistics = {"radial_deficit", "crit_trig_moment_1", "gauss_lucas_violations"};
  const ConvergenceReport report = run_experiment(spec);
  const Verdict deficit = trend_check(report, "radial_deficit");
  double violations = 0.0;
  for (std::size_t n : spec.sizes) violations += report.cell("gauss_lucas_violations", n).max;
  return {check("radial_deficit_trend", deficit == Verdict::Decreasing,
                "trend " + std::string(to_string(deficit))),
          check("gauss_lucas_samplewise", violations == 0.0,
                num(violations) + " critical points outside the hull")};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"groups",  "gauss-lucas", "companion", "interlacing",
                                              "metrics", "clt",         "convergence"};
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, std::uint64_t seed) {
  if (suite == "groups") return suite_groups(seed);
  if (suite == "gauss-lucas") return suite_gauss_lucas(seed);
  if (suite == "companion") return suite_companion(seed);
  if (suite == "interlacing") return suite_interlacing(seed);
  if (suite == "metrics") return suite_metrics(seed);
  if (suite == "clt") return suite_clt(seed);
  if (suite == "convergence") return suite_convergence(seed);
  throw LookupError("unknown suite '" + std::string(suite) + "'");
}

nlohmann::json to_json(std::string_view suite, const std::vector<CheckResult>& results) {
  nlohmann::json checks = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    all = all && r.passed;
  }
  return {{"suite", std::string(suite)}, {"passed", all}, {"checks", checks}};
}

}  // namespace critlab

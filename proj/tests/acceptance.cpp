// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "critlab/conditions.hpp"
#include "critlab/eigen.hpp"
#include "critlab/ensembles.hpp"
#include "critlab/harness.hpp"
#include "critlab/measures.hpp"
#include "critlab/polynomials.hpp"
#include "critlab/root_models.hpp"
#include "oracles.hpp"

using namespace critlab;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

ExperimentSpec load_spec(const std::string& name) {
  std::ifstream in(std::string(CRITLAB_SPECS) + "/" + name);
  return spec_from_json(nlohmann::json::parse(in));
}

std::vector<cplx> disk_points(std::size_t n, RngStream& rng) {
  std::vector<cplx> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(std::polar(std::sqrt(rng.uniform()), kTwoPi * rng.uniform()));
  return out;
}

// Reports produced along the way, re-run for the determinism criterion.
std::vector<std::pair<ExperimentSpec, std::string>> g_reports;

ConvergenceReport run_and_keep(const ExperimentSpec& spec) {
  ConvergenceReport r = run_experiment(spec);
  g_reports.emplace_back(spec, to_json(r).dump());
  return r;
}

Outcome criterion_groups() {
  const auto t0 = Clock::now();
  double worst = 0.0, worst_det = 0.0;
  bool ok = true;
  const GroupKind kinds[] = {GroupKind::Orthogonal, GroupKind::SpecialOrthogonal,
                             GroupKind::Unitary, GroupKind::Symplectic};
  for (GroupKind kind : kinds) {
    for (std::size_t n : {4, 10, 50}) {
      RngStream rng(101, mix_stream(static_cast<std::uint64_t>(kind), n));
      for (int t = 0; t < 20; ++t) {
        const SquareMatrix m = haar_sample(kind, n, rng);
        const double res = membership_residual(m, kind) / static_cast<double>(n);
        worst = std::max(worst, res);
        ok = ok && res <= 1e-10;
        if (kind == GroupKind::SpecialOrthogonal) {
          const double d = std::abs(determinant(m) - 1.0);
          worst_det = std::max(worst_det, d);
          ok = ok && d <= 1e-10;
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  return {ok && secs < 10.0, "max residual/n " + fmt("%.2e", worst) + ", max |det-1| " +
                                 fmt("%.2e", worst_det) + ", " + fmt("%.1f", secs) + " s"};
}

Outcome criterion_companion() {
  const auto t0 = Clock::now();
  RngStream rng(102, 0);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t deg = 2 + static_cast<std::size_t>(rng.uniform() * 29);
    const RootForm p{disk_points(deg, rng)};
    const auto oracle = roots_from_coeffs(derivative(coeffs_from_roots(p))).roots;
    worst = std::max(worst, matching_distance(critical_points_from_roots(p).points, oracle));
  }
  const double secs = seconds_since(t0);
  return {worst < 1e-6 && secs < 30.0,
          "max matching distance " + fmt("%.2e", worst) + ", " + fmt("%.1f", secs) + " s"};
}

Outcome criterion_gauss_lucas(const std::vector<ConvergenceReport>& haar_reports) {
  RngStream rng(103, 0);
  std::size_t violations = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t deg = 2 + static_cast<std::size_t>(rng.uniform() * 49);
    const RootForm p{disk_points(deg, rng)};
    if (!gauss_lucas_check(p, critical_points_from_roots(p), 1e-8)) violations++;
  }
  double haar_violations = 0.0;
  std::size_t haar_trials = 0;
  for (const auto& r : haar_reports) {
    for (const auto& v : r.raw) {
      if (v.statistic != "gauss_lucas_violations") continue;
      haar_violations += v.value;
      haar_trials++;
    }
  }
  return {violations == 0 && haar_violations == 0.0 && haar_trials > 0,
          std::to_string(violations) + " violations in 1000 random polynomials, " +
              std::to_string(static_cast<long>(haar_violations)) + " in " +
              std::to_string(haar_trials) + " Haar and conjugate-pair trials"};
}

Outcome criterion_interlacing() {
  RngStream rng(104, 0);
  std::size_t worst = 0;
  for (int s = 0; s < 20; ++s) {
    const std::vector<double> roots = hermitian_eigenvalues(sample_wigner(100, rng));
    RootForm p;
    for (double x : roots) p.roots.emplace_back(x, 0.0);
    std::vector<double> crit;
    for (const cplx& y : critical_points_from_roots(p).points) crit.push_back(y.real());
    std::sort(crit.begin(), crit.end());
    const double lo = roots.front() - 1.0, hi = roots.back() + 1.0;
    for (int k = 0; k < 100; ++k) {
      double a = lo + (hi - lo) * rng.uniform();
      double b = lo + (hi - lo) * rng.uniform();
      if (a > b) std::swap(a, b);
      worst = std::max(worst, interlacing_defect(roots, crit, {a, b}));
    }
  }
  return {worst <= 1, "max defect " + std::to_string(worst) + " over 2000 intervals"};
}

Outcome criterion_semicircle() {
  const auto t0 = Clock::now();
  const ConvergenceReport r = run_and_keep(load_spec("wigner_semicircle.json"));
  const std::vector<double> med = r.medians("levy_semicircle");
  const double secs = seconds_since(t0);
  const bool ok = trend_of(med) == Verdict::Decreasing && med.back() < 0.05 && secs < 180.0;
  return {ok, "medians " + fmt("%.4f", med[0]) + " / " + fmt("%.4f", med[1]) + " / " +
                  fmt("%.4f", med[2]) + ", " + fmt("%.1f", secs) + " s"};
}

// Radial deficit and critical-point trig moments, shared by the Haar and
// conjugate-pair checks.
bool critical_point_checks(const ConvergenceReport& r, std::string& detail) {
  bool ok = r.trends.at("radial_deficit") == Verdict::Decreasing &&
            r.cell("radial_deficit", 200).q50 < 0.05;
  detail += to_string(r.spec.model);
  detail += ": deficit@200 " + fmt("%.4f", r.cell("radial_deficit", 200).q50);
  std::string moments;
  for (int m = 1; m <= 5; ++m) {
    const Verdict v = r.trends.at("crit_trig_moment_" + std::to_string(m));
    ok = ok && v == Verdict::Decreasing;
    moments += std::string(to_string(v)).substr(0, 3);
    if (m < 5) moments += ",";
  }
  detail += ", moments " + moments + "; ";
  return ok;
}

Outcome criterion_radial(std::vector<ConvergenceReport>& keep) {
  const auto t0 = Clock::now();
  std::string detail;
  bool ok = true;
  for (const char* name : {"haar_unitary.json", "haar_orthogonal.json"}) {
    keep.push_back(run_and_keep(load_spec(name)));
    ok = critical_point_checks(keep.back(), detail) && ok;
  }
  const double secs = seconds_since(t0);
  return {ok && secs < 240.0, detail + fmt("%.1f", secs) + " s"};
}

Outcome criterion_conditions(std::vector<ConvergenceReport>& keep) {
  std::string detail;
  bool ok = true;
  for (const char* name : {"iid_uniform.json", "conjugate_pairs.json"}) {
    ExperimentSpec spec = load_spec(name);
    spec.trials = 100;
    const ConvergenceReport r = run_and_keep(spec);
    const double q10 = r.cell("condition_i", 200).q10;
    double worst_log = 0.0;
    for (const std::string& key : r.statistics)
      if (key.rfind("abs_log_L@", 0) == 0) worst_log = std::max(worst_log, r.cell(key, 200).q50);
    ok = ok && q10 > 0.05 && worst_log < 0.05;
    if (spec.model == Model::ConjugatePairs) {
      keep.push_back(r);
      std::size_t violations = 0;
      for (const auto& v : r.raw)
        if (v.statistic == "gauss_lucas_violations" && v.value != 0.0) violations++;
      ok = ok && violations == 0;
    }
    ok = critical_point_checks(r, detail) && ok;
    detail += "cond_i q10 " + fmt("%.3f", q10) + ", max median |log L|/n " +
              fmt("%.4f", worst_log) + "; ";
  }
  return {ok, detail};
}

Outcome criterion_clt() {
  const std::vector<double> d = clt_trace_experiment(GroupKind::Unitary, 64, 3, 2000, 801);
  const double control = gaussian_control_distance(0.5, 2000, 802);
  bool ok = control < 0.05;
  std::string detail = "unitary W1";
  for (double x : d) {
    ok = ok && x < 0.1;
    detail += " " + fmt("%.4f", x);
  }
  int wins = 0;
  for (std::uint64_t run = 0; run < 10; ++run) {
    const std::uint64_t seed = 810 + run;
    const double corrected = clt_trace_experiment(GroupKind::Orthogonal, 64, 2, 2000, seed)[1];
    const double plain = clt_trace_experiment(GroupKind::Orthogonal, 64, 2, 2000, seed, false)[1];
    if (corrected < plain) wins++;
  }
  ok = ok && wins >= 8;
  return {ok, detail + ", control " + fmt("%.4f", control) + ", orthogonal j=2 corrected wins " +
                  std::to_string(wins) + "/10"};
}

Outcome criterion_kac() {
  const ConvergenceReport r = run_and_keep(load_spec("kac_gaussian.json"));
  // Every trial has the same number of roots, so the pooled fraction is the mean.
  const double k1 = r.cell("annulus_fraction_k1", 200).mean;
  const double k2 = r.cell("annulus_fraction_k2", 200).mean;
  const double moment = r.cell("root_trig_moment_1", 200).q50;
  return {k1 >= 0.9 && k2 >= 0.9 && moment < 0.1,
          "annulus fraction k=1 " + fmt("%.4f", k1) + ", k=2 " + fmt("%.4f", k2) +
              " (need 0.9), median |first angle moment| " + fmt("%.4f", moment)};
}

Outcome criterion_metrics() {
  RngStream rng(1001, 0);
  double worst_levy = 0.0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t na = 1 + static_cast<std::size_t>(rng.uniform() * 8);
    const std::size_t nb = 1 + static_cast<std::size_t>(rng.uniform() * 8);
    std::vector<double> a(na), b(nb);
    for (double& x : a) x = 2.0 * rng.uniform();
    for (double& x : b) x = 2.0 * rng.uniform();
    const double fast = levy_distance(RealMeasure(a), RealMeasure(b));
    worst_levy = std::max(worst_levy, std::abs(fast - oracle::levy_grid(a, b)));
  }
  double worst_w1 = 0.0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int t = 0; t < 20; ++t) {
      std::vector<double> xs(n), ys(n);
      for (double& x : xs) x = rng.normal();
      for (double& y : ys) y = rng.normal();
      const double exact = oracle::w1_exhaustive(xs, ys);
      worst_w1 = std::max(worst_w1, std::abs(wasserstein1_empirical(xs, ys) - exact) /
                                        std::max(1.0, exact));
    }
  }
  return {worst_levy <= 1e-3 && worst_w1 <= 1e-14,
          "max |levy - grid oracle| " + fmt("%.2e", worst_levy) + ", max W1 rel. error " +
              fmt("%.2e", worst_w1)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool run_cli(const std::string& args) {
  const std::string cmd = std::string(CRITLAB_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) && WEXITSTATUS(status) == 0;
}

Outcome criterion_figures() {
  const fs::path dir = fs::temp_directory_path() / ("critlab_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  bool ok = true;
  for (const char* fig : {"fig1", "fig2"}) {
    for (const char* format : {"csv", "svg"}) {
      const fs::path a = dir / (std::string(fig) + "a." + format);
      const fs::path b = dir / (std::string(fig) + "b." + format);
      const std::string base = std::string("figure --figure ") + fig + " --format " + format;
      ok = ok && run_cli(base + " --out " + a.string()) && run_cli(base + " --out " + b.string());
      ok = ok && !slurp(a).empty() && slurp(a) == slurp(b);
    }
  }
  // Containment on the orthogonal figure, read back from the CSV.
  std::istringstream rows(slurp(dir / "fig1a.csv"));
  std::string line;
  std::getline(rows, line);
  RootForm zeros;
  CriticalSet crit;
  while (std::getline(rows, line)) {
    const auto c1 = line.find(','), c2 = line.rfind(',');
    const cplx z(std::stod(line.substr(0, c1)), std::stod(line.substr(c1 + 1, c2 - c1 - 1)));
    (line.substr(c2 + 1) == "zeros" ? zeros.roots : crit.points).push_back(z);
  }
  const bool contained = zeros.roots.size() == 50 && crit.points.size() == 49 &&
                         gauss_lucas_check(zeros, crit, 1e-8);
  fs::remove_all(dir);
  return {ok && contained, std::string("repeat runs ") + (ok ? "byte-identical" : "differ") +
                               ", fig1 containment " + (contained ? "holds" : "fails")};
}

Outcome criterion_determinism(Clock::time_point suite_start) {
  std::size_t same = 0;
  for (const auto& [spec, dump] : g_reports) {
    // Second pass on a different worker count.
    RunOptions opts;
    opts.threads = default_thread_count() == 1 ? 3 : 1;
    if (to_json(run_experiment(spec, opts)).dump() == dump) same++;
  }
  const double secs = seconds_since(suite_start);
  return {same == g_reports.size() && secs < 600.0,
          std::to_string(same) + "/" + std::to_string(g_reports.size()) +
              " reports byte-identical on re-run, suite " + fmt("%.1f", secs) + " s"};
}

}  // namespace

int main() {
  const auto start = Clock::now();
  int failures = 0;
  auto report = [&](int id, const char* title, const std::function<Outcome()>& body) {
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) failures++;
    std::printf("%s %2d %s: %s\n", o.passed ? "PASS" : "FAIL", id, title, o.detail.c_str());
    std::fflush(stdout);
  };

  std::vector<ConvergenceReport> haar;
  report(1, "group sampling", criterion_groups);
  report(2, "companion oracle", criterion_companion);
  // 6 and 7 run before 3 so their Haar and pair trials feed the hull check.
  Outcome radial{false, ""}, conditions{false, ""};
  try {
    radial = criterion_radial(haar);
  } catch (const std::exception& e) {
    radial = {false, std::string("exception: ") + e.what()};
  }
  try {
    conditions = criterion_conditions(haar);
  } catch (const std::exception& e) {
    conditions = {false, std::string("exception: ") + e.what()};
  }
  report(3, "gauss-lucas", [&] { return criterion_gauss_lucas(haar); });
  report(4, "interlacing", criterion_interlacing);
  report(5, "semicircle", criterion_semicircle);
  report(6, "radial convergence", [&] { return radial; });
  report(7, "anti-concentration conditions", [&] { return conditions; });
  report(8, "trace CLT", criterion_clt);
  report(9, "kac annulus", criterion_kac);
  report(10, "metric oracles", criterion_metrics);
  report(11, "figures", criterion_figures);
  report(12, "determinism", [&] { return criterion_determinism(start); });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

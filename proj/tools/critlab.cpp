// critlab: sample ensembles, compute critical points, reproduce figures, run
// verification suites and experiment specs.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "critlab/ensembles.hpp"
#include "critlab/errors.hpp"
#include "critlab/figures.hpp"
#include "critlab/harness.hpp"
#include "critlab/measures.hpp"
#include "critlab/polynomials.hpp"
#include "critlab/root_models.hpp"
#include "critlab/verify.hpp"

namespace {

using namespace critlab;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

/// Bad input from the user; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

void finish_output(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

struct SampleArgs {
  std::string model;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::string out;
};

int cmd_sample(const SampleArgs& a) {
  RngStream rng(a.seed, a.stream);
  const std::string model = [&] {
    std::string s = a.model;
    std::replace(s.begin(), s.end(), '_', '-');
    return s;
  }();

  std::optional<GroupKind> group;
  if (model == "haar-o") group = GroupKind::Orthogonal;
  if (model == "haar-so") group = GroupKind::SpecialOrthogonal;
  if (model == "haar-u") group = GroupKind::Unitary;
  if (model == "haar-sp") group = GroupKind::Symplectic;

  std::ostringstream body;
  try {
    if (group) {
      const SquareMatrix m = haar_sample(*group, a.n, rng);
      write_matrix_csv(body, m);
      std::cout << "membership residual: " << membership_residual(m, *group) << '\n';
    } else if (model == "wigner") {
      write_matrix_csv(body, sample_wigner(a.n, rng));
    } else if (model == "ginibre") {
      write_matrix_csv(body, sample_ginibre_real(a.n, rng));
    } else if (model == "gaussian-real") {
      write_matrix_csv(body, sample_real_gaussian_matrix(a.n, rng));
    } else if (model == "gaussian-complex") {
      write_matrix_csv(body, sample_complex_gaussian_matrix(a.n, rng));
    } else if (model == "iid-uniform") {
      write_angles_csv(body, iid_uniform_angles(a.n, rng));
    } else if (model == "conjugate-pairs") {
      if (a.n < 2) throw UsageError("conjugate-pairs needs n >= 2");
      write_angles_csv(body, conjugate_pair_angles(a.n / 2, rng, a.n % 2 != 0));
    } else if (model == "kac") {
      write_points_csv(body, kac_polynomial(a.n, rng, CoefficientLaw::RealGaussian).coeffs());
    } else {
      throw UsageError("unknown model '" + a.model + "'");
    }
  } catch (const InvalidDimension& e) {
    throw UsageError(e.what());
  }
  std::ofstream out = open_output(a.out);
  out << body.str();
  finish_output(out, a.out);
  return kExitOk;
}

struct CriticalArgs {
  std::string in;
  std::string out;
};

int cmd_critical(const CriticalArgs& a) {
  std::ifstream in(a.in);
  if (!in) throw UsageError("cannot read '" + a.in + "'");
  RootForm roots;
  try {
    roots.roots = read_points_csv(in);
  } catch (const ContractViolation& e) {
    throw UsageError(std::string("cannot parse roots: ") + e.what());
  }
  if (roots.degree() < 2) throw UsageError("degree must be >= 2");
  const CriticalSet crit = critical_points_from_roots(roots);
  std::ofstream out = open_output(a.out);
  write_points_csv(out, crit.points);
  finish_output(out, a.out);
  const PolarForm polar = polar_decompose(ComplexMeasure(crit.points));
  const bool hull = gauss_lucas_check(roots, crit, default_hull_tolerance(roots));
  std::cout << "critical points: " << crit.points.size() << '\n'
            << "radial deficit: " << radial_deficit(polar.radii) << '\n'
            << "gauss-lucas: " << (hull ? "true" : "false") << '\n';
  return hull ? kExitOk : kExitCheckFailed;
}

struct FigureArgs {
  std::string figure;
  std::size_t n = 0;
  std::uint64_t seed = 2026;
  std::string out;
  std::string format = "csv";
};

int cmd_figure(const FigureArgs& a) {
  const auto kind = parse_figure_kind(a.figure);
  if (!kind) throw UsageError("unknown figure '" + a.figure + "'");
  if (a.format != "csv" && a.format != "svg") throw UsageError("format must be csv or svg");
  const std::size_t n = a.n == 0 ? default_figure_size(*kind) : a.n;
  const FigureData data = figure_data(*kind, n, a.seed);
  std::ofstream out = open_output(a.out);
  if (a.format == "csv") {
    write_figure_csv(out, data);
  } else {
    const std::string title = *kind == FigureKind::Fig1
                                  ? "Haar orthogonal n=" + std::to_string(n)
                                  : "Real Ginibre n=" + std::to_string(n) + ", scaled by 1/sqrt(n)";
    write_figure_svg(out, data, title);
  }
  finish_output(out, a.out);
  std::cout << "zeros: " << data.zeros.size() << ", critical points: " << data.critical.size()
            << '\n';
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 20260101;
};

int cmd_verify(const VerifyArgs& a) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), a.suite) == names.end()) {
    std::string list;
    for (const auto& s : names) list += (list.empty() ? "" : ", ") + s;
    throw UsageError("unknown suite '" + a.suite + "'; expected one of: " + list);
  }
  const auto results = run_suite(a.suite, a.seed);
  const nlohmann::json summary = to_json(a.suite, results);
  std::cout << summary.dump(2) << '\n';
  bool ok = true;
  for (const auto& r : results) {
    if (!r.passed) {
      std::cerr << "FAILED " << r.name << ": " << r.detail << '\n';
      ok = false;
    }
  }
  return ok ? kExitOk : kExitCheckFailed;
}

struct ReportArgs {
  std::string spec;
  std::string out;
  std::string raw;
  std::size_t threads = 0;
};

int cmd_report(const ReportArgs& a) {
  std::ifstream in(a.spec);
  if (!in) throw UsageError("cannot read '" + a.spec + "'");
  ExperimentSpec spec;
  try {
    spec = spec_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed spec JSON: ") + e.what());
  } catch (const ContractViolation& e) {
    throw UsageError(std::string("invalid spec: ") + e.what());
  }
  const ConvergenceReport report = run_experiment(spec, RunOptions{a.threads});
  const std::string text = to_json(report).dump(2) + "\n";
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out = open_output(a.out);
    out << text;
    finish_output(out, a.out);
    for (const auto& [stat, verdict] : report.trends) {
      std::cout << stat << ": " << to_string(verdict) << '\n';
    }
  }
  if (!a.raw.empty()) {
    std::ofstream raw = open_output(a.raw);
    write_raw_csv(raw, report);
    finish_output(raw, a.raw);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"critlab: critical points of random characteristic polynomials"};
  app.require_subcommand(1);

  SampleArgs sample;
  auto* sample_cmd = app.add_subcommand("sample", "Sample a matrix or angle set and write CSV");
  sample_cmd->add_option("--model", sample.model,
                         "haar-o, haar-so, haar-u, haar-sp, wigner, ginibre, gaussian-real, "
                         "gaussian-complex, iid-uniform, conjugate-pairs, kac")
      ->required();
  sample_cmd->add_option("--n", sample.n, "Dimension or sample size")->required();
  sample_cmd->add_option("--seed", sample.seed, "RNG seed")->required();
  sample_cmd->add_option("--stream", sample.stream, "RNG stream id");
  sample_cmd->add_option("--out", sample.out, "Output CSV path")->required();

  CriticalArgs critical;
  auto* critical_cmd = app.add_subcommand("critical", "Critical points of prod (z - x_j)");
  critical_cmd->add_option("--in", critical.in, "Roots CSV (re,im)")->required();
  critical_cmd->add_option("--out", critical.out, "Critical points CSV")->required();

  FigureArgs figure;
  auto* figure_cmd = app.add_subcommand("figure", "Regenerate figure data");
  figure_cmd->add_option("--figure", figure.figure, "fig1 or fig2")->required();
  figure_cmd->add_option("--n", figure.n, "Matrix size (default 50 / 300)");
  figure_cmd->add_option("--seed", figure.seed, "RNG seed");
  figure_cmd->add_option("--out", figure.out, "Output path")->required();
  figure_cmd->add_option("--format", figure.format, "csv or svg");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run an invariant suite");
  verify_cmd->add_option("--suite", verify.suite,
                         "groups, gauss-lucas, companion, interlacing, metrics, clt, convergence")
      ->required();
  verify_cmd->add_option("--seed", verify.seed, "RNG seed");

  ReportArgs report;
  auto* report_cmd = app.add_subcommand("report", "Run an experiment spec");
  report_cmd->add_option("--spec", report.spec, "Experiment spec JSON")->required();
  report_cmd->add_option("--out", report.out, "Report JSON path (default stdout)");
  report_cmd->add_option("--raw", report.raw, "Per-trial values CSV");
  report_cmd->add_option("--threads", report.threads, "Worker threads (default CRITLAB_THREADS)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sample_cmd) return cmd_sample(sample);
    if (*critical_cmd) return cmd_critical(critical);
    if (*figure_cmd) return cmd_figure(figure);
    if (*verify_cmd) return cmd_verify(verify);
    if (*report_cmd) return cmd_report(report);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n";
    for (const auto* sub : app.get_subcommands()) std::cerr << sub->help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

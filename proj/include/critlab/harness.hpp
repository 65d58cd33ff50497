#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "critlab/ensembles.hpp"
#include "critlab/polynomials.hpp"
#include "critlab/root_models.hpp"

namespace critlab {

enum class Model {
  HaarO,
  HaarSO,
  HaarU,
  HaarSp,
  Wigner,
  GinibreReal,
  IidUniform,
  ConjugatePairs,
  Kac,
};

std::string_view to_string(Model model) noexcept;
std::optional<Model> parse_model(std::string_view text) noexcept;

/// Group behind a Haar model, if any.
std::optional<GroupKind> group_of(Model model) noexcept;

/// Models whose roots are e^{i theta_j}.
bool is_circle_model(Model model) noexcept;

struct ExperimentSpec {
  std::string name;
  Model model = Model::HaarU;
  std::vector<std::size_t> sizes;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::vector<std::string> statistics;
  std::optional<std::vector<cplx>> z_grid;
  CoefficientLaw kac_law = CoefficientLaw::RealGaussian;
};

/// Throws ContractViolation naming the offending field.
void validate(const ExperimentSpec& spec);

ExperimentSpec spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ExperimentSpec& spec);

/// One realization of a model at one size.
struct TrialSample {
  std::optional<AngleSample> angles;  ///< circle models only
  RootForm roots;
  CriticalSet crit;
  std::optional<std::vector<double>> real_roots;  ///< ascending, Wigner only
  std::optional<std::vector<double>> real_crit;   ///< ascending, Wigner only
};

/// Samples the model and, when `with_critical` is set, computes critical
/// points through the critical_point_matrix route. Wigner and Ginibre
/// spectra are scaled by 1/sqrt(n).
TrialSample sample_trial(const ExperimentSpec& spec, std::size_t n, RngStream& rng,
                         bool with_critical = true);

/// Whether any requested statistic reads the critical points.
bool needs_critical_points(const ExperimentSpec& spec);

/// Statistic keys a spec produces: grid statistics expand to one key per z
/// ("condition_ii@z3"), the rest map one to one.
std::vector<std::string> statistic_keys(const ExperimentSpec& spec);

enum class Verdict { Decreasing, Flat, Increasing };
std::string_view to_string(Verdict v) noexcept;

struct CellSummary {
  std::string statistic;
  std::size_t n = 0;
  std::size_t count = 0;
  double q10 = 0.0;
  double q50 = 0.0;
  double q90 = 0.0;
  double mean = 0.0;
  double max = 0.0;
};

struct RawValue {
  std::string statistic;
  std::size_t n;
  std::size_t trial;
  double value;
};

struct ConvergenceReport {
  ExperimentSpec spec;
  std::vector<std::string> statistics;  ///< expanded keys, in spec order
  std::vector<CellSummary> cells;       ///< ordered by (statistic, size)
  std::map<std::string, Verdict> trends;
  std::vector<RawValue> raw;            ///< ordered by (size, trial, statistic)
  nlohmann::json metadata;

  const CellSummary& cell(std::string_view statistic, std::size_t n) const;
  std::vector<double> medians(std::string_view statistic) const;
  /// Raw values for one (statistic, size) cell, in trial order.
  std::vector<double> values(std::string_view statistic, std::size_t n) const;
};

struct RunOptions {
  /// 0 means CRITLAB_THREADS, else the machine's parallelism.
  std::size_t threads = 0;
};

std::size_t default_thread_count();

/// Runs every (size, trial) pair, each on its own RngStream
/// (seed, mix_stream(size_index, trial_index)), and aggregates in (size, trial)
/// order, so the result does not depend on the thread count. Any failed trial
/// aborts the run with the failing (size, trial) in the message.
ConvergenceReport run_experiment(const ExperimentSpec& spec, RunOptions options = {});

/// Medians must strictly decrease from each size to the next for
/// Decreasing; Flat if every median stays within 10% of the first;
/// Increasing otherwise. Throws LookupError for an unknown statistic.
Verdict trend_check(const ConvergenceReport& report, std::string_view statistic);
Verdict trend_of(const std::vector<double>& medians);

/// Throws ContractViolation if quantiles are unordered or a cell count
/// differs from the trial count.
void validate_report(const ConvergenceReport& report);

nlohmann::json to_json(const ConvergenceReport& report);

/// "stat,size,trial,value" rows.
void write_raw_csv(std::ostream& out, const ConvergenceReport& report);

/// Sample quantile with linear interpolation between order statistics.
double quantile(std::vector<double> values, double p);

/// Per-j W1 distance between Re(f_j(M)) over `trials` Haar samples and an
/// equal-size N(0, v_j) sample, v_j = j/2 for U(n) and j otherwise.
/// `apply_correction = false` drops the parity shift (control arm).
/// Requires n >= 4 j_max + 1.
std::vector<double> clt_trace_experiment(GroupKind kind, std::size_t n, std::size_t j_max,
                                         std::size_t trials, std::uint64_t seed,
                                         bool apply_correction = true,
                                         RunOptions options = {});

/// W1 between two synthetic N(0, variance) samples of size `trials`.
double gaussian_control_distance(double variance, std::size_t trials, std::uint64_t seed);

/// Limit variance of Re f_j for the group.
double trace_limit_variance(GroupKind kind, std::size_t j) noexcept;

/// Calls body(i) for i in [0, count) on up to `threads` workers. The first
/// exception by index is rethrown after all workers stop.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace critlab

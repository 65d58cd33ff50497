#include "critlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "critlab/conditions.hpp"
#include "critlab/eigen.hpp"
#include "critlab/errors.hpp"
#include "critlab/format.hpp"
#include "critlab/measures.hpp"

namespace critlab {

namespace {

constexpr std::uint64_t kCltTrialTag = 0x636c742d747269ULL;
constexpr std::uint64_t kCltGaussTag = 0x636c742d676175ULL;
constexpr std::uint64_t kControlTag = 0x636c742d63746cULL;
constexpr const char* kVersion = "critlab 1.0.0";

std::string normalize_tag(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), '-', '_');
  return s;
}

// A statistic name split into its base and optional integer suffix.
struct StatName {
  std::string base;
  int index = 0;
};

std::optional<StatName> split_indexed(std::string_view name, std::string_view prefix) {
  if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) return std::nullopt;
  const std::string_view digits = name.substr(prefix.size());
  int value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || value <= 0) return std::nullopt;
  return StatName{std::string(prefix), value};
}

enum class StatKind {
  RadialDeficit,
  CritTrigMoment,
  RootTrigMoment,
  ConditionI,
  ConditionII,
  AbsLogL,
  GaussLucasViolations,
  MomentTransfer,
  LevySemicircle,
  LevyRootsCritical,
  AnnulusFraction,
};

struct StatSpec {
  StatKind kind;
  int index = 0;  // moment order, derivative order
  bool per_z = false;
};

std::optional<StatSpec> parse_stat(std::string_view name) {
  if (name == "radial_deficit") return StatSpec{StatKind::RadialDeficit};
  if (name == "condition_i") return StatSpec{StatKind::ConditionI};
  if (name == "condition_ii") return StatSpec{StatKind::ConditionII, 0, true};
  if (name == "abs_log_L") return StatSpec{StatKind::AbsLogL, 0, true};
  if (name == "gauss_lucas_violations") return StatSpec{StatKind::GaussLucasViolations};
  if (name == "levy_semicircle") return StatSpec{StatKind::LevySemicircle};
  if (name == "levy_roots_critical") return StatSpec{StatKind::LevyRootsCritical};
  if (auto s = split_indexed(name, "crit_trig_moment_"))
    return StatSpec{StatKind::CritTrigMoment, s->index};
  if (auto s = split_indexed(name, "root_trig_moment_"))
    return StatSpec{StatKind::RootTrigMoment, s->index};
  if (auto s = split_indexed(name, "moment_transfer_"))
    return StatSpec{StatKind::MomentTransfer, s->index};
  if (auto s = split_indexed(name, "annulus_fraction_k"))
    return StatSpec{StatKind::AnnulusFraction, s->index};
  return std::nullopt;
}

std::vector<cplx> grid_of(const ExperimentSpec& spec) {
  return spec.z_grid ? *spec.z_grid : default_z_grid();
}

double fraction_in_annulus(const std::vector<cplx>& pts, double lo, double hi) {
  std::size_t inside = 0;
  for (const auto& z : pts) {
    const double r = std::abs(z);
    if (r >= lo && r <= hi) ++inside;
  }
  return static_cast<double>(inside) / static_cast<double>(pts.size());
}

cplx power_mean(const std::vector<cplx>& pts, int k) {
  cplx sum = 0.0;
  for (const auto& z : pts) sum += std::pow(z, k);
  return sum / static_cast<double>(pts.size());
}

std::vector<double> real_parts_sorted(const std::vector<cplx>& pts) {
  std::vector<double> r;
  r.reserve(pts.size());
  for (const auto& z : pts) r.push_back(z.real());
  std::sort(r.begin(), r.end());
  return r;
}

// Values for every expanded key of one trial, in key order.
std::vector<double> evaluate_trial(const ExperimentSpec& spec, const std::vector<cplx>& grid,
                                   const TrialSample& s) {
  std::vector<double> out;
  std::optional<PolarForm> crit_polar;
  const auto crit_polar_form = [&]() -> const PolarForm& {
    if (!crit_polar) crit_polar = polar_decompose(ComplexMeasure(s.crit.points));
    return *crit_polar;
  };
  for (const auto& name : spec.statistics) {
    const StatSpec st = *parse_stat(name);
    switch (st.kind) {
      case StatKind::RadialDeficit:
        out.push_back(radial_deficit(crit_polar_form().radii));
        break;
      case StatKind::CritTrigMoment:
        out.push_back(std::abs(trig_moment(crit_polar_form().angles, st.index)));
        break;
      case StatKind::RootTrigMoment: {
        const PolarForm p = polar_decompose(ComplexMeasure(s.roots.roots));
        out.push_back(std::abs(trig_moment(p.angles, st.index)));
        break;
      }
      case StatKind::ConditionI:
        out.push_back(condition_i_stat(*s.angles));
        break;
      case StatKind::ConditionII:
        for (const auto& z : grid) out.push_back(condition_ii_stat(*s.angles, z));
        break;
      case StatKind::AbsLogL:
        for (const auto& z : grid) out.push_back(std::abs(normalized_log_abs_L(*s.angles, z)));
        break;
      case StatKind::GaussLucasViolations: {
        const double tol = 1e-8;
        std::size_t bad = 0;
        for (const auto& y : s.crit.points) {
          if (distance_to_hull(s.roots.roots, y) > tol) ++bad;
        }
        out.push_back(static_cast<double>(bad));
        break;
      }
      case StatKind::MomentTransfer: {
        const double n = static_cast<double>(s.roots.degree());
        const cplx diff = power_mean(s.roots.roots, st.index) - power_mean(s.crit.points, st.index);
        out.push_back((n - 1.0) * std::abs(diff));
        break;
      }
      case StatKind::LevySemicircle:
        out.push_back(levy_to_semicircle(*s.real_roots));
        break;
      case StatKind::LevyRootsCritical:
        out.push_back(levy_distance(RealMeasure(*s.real_roots), RealMeasure(*s.real_crit)));
        break;
      case StatKind::AnnulusFraction: {
        RootForm current = s.roots;
        for (int k = 0; k < st.index; ++k) current = RootForm{critical_points_from_roots(current).points};
        out.push_back(fraction_in_annulus(current.roots, 0.9, 1.1));
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Model model) noexcept {
  switch (model) {
    case Model::HaarO: return "haar_o";
    case Model::HaarSO: return "haar_so";
    case Model::HaarU: return "haar_u";
    case Model::HaarSp: return "haar_sp";
    case Model::Wigner: return "wigner";
    case Model::GinibreReal: return "ginibre_real";
    case Model::IidUniform: return "iid_uniform";
    case Model::ConjugatePairs: return "conjugate_pairs";
    case Model::Kac: return "kac";
  }
  return "unknown";
}

std::optional<Model> parse_model(std::string_view text) noexcept {
  const std::string s = normalize_tag(text);
  for (Model m : {Model::HaarO, Model::HaarSO, Model::HaarU, Model::HaarSp, Model::Wigner,
                  Model::GinibreReal, Model::IidUniform, Model::ConjugatePairs, Model::Kac}) {
    if (s == to_string(m)) return m;
  }
  return std::nullopt;
}

std::optional<GroupKind> group_of(Model model) noexcept {
  switch (model) {
    case Model::HaarO: return GroupKind::Orthogonal;
    case Model::HaarSO: return GroupKind::SpecialOrthogonal;
    case Model::HaarU: return GroupKind::Unitary;
    case Model::HaarSp: return GroupKind::Symplectic;
    default: return std::nullopt;
  }
}

bool is_circle_model(Model model) noexcept {
  return group_of(model).has_value() || model == Model::IidUniform ||
         model == Model::ConjugatePairs;
}

void validate(const ExperimentSpec& spec) {
  if (spec.sizes.empty()) throw ContractViolation("field 'sizes': must not be empty");
  for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
    if (spec.sizes[i] < 2) throw ContractViolation("field 'sizes': every size must be >= 2");
    if (i > 0 && spec.sizes[i] <= spec.sizes[i - 1]) {
      throw ContractViolation("field 'sizes': must be strictly ascending");
    }
    if (spec.model == Model::HaarSp && spec.sizes[i] % 2 != 0) {
      throw ContractViolation("field 'sizes': haar_sp sizes must be even");
    }
  }
  if (spec.trials == 0) throw ContractViolation("field 'trials': must be >= 1");
  if (spec.statistics.empty()) throw ContractViolation("field 'statistics': must not be empty");
  for (const auto& name : spec.statistics) {
    const auto st = parse_stat(name);
    if (!st) throw ContractViolation("field 'statistics': unknown statistic '" + name + "'");
    const bool needs_angles = st->kind == StatKind::ConditionI ||
                              st->kind == StatKind::ConditionII || st->kind == StatKind::AbsLogL;
    if (needs_angles && !is_circle_model(spec.model)) {
      throw ContractViolation("field 'statistics': '" + name +
                              "' needs a model with roots on the unit circle");
    }
    const bool needs_real = st->kind == StatKind::LevySemicircle ||
                            st->kind == StatKind::LevyRootsCritical;
    if (needs_real && spec.model != Model::Wigner) {
      throw ContractViolation("field 'statistics': '" + name + "' needs the wigner model");
    }
    if (st->kind == StatKind::AnnulusFraction &&
        spec.sizes.front() <= static_cast<std::size_t>(st->index)) {
      throw ContractViolation("field 'sizes': too small for '" + name + "'");
    }
  }
  if (spec.z_grid) {
    if (spec.z_grid->empty()) throw ContractViolation("field 'z_grid': must not be empty");
    for (const auto& z : *spec.z_grid) {
      if (!(std::abs(z) < 1.0)) throw ContractViolation("field 'z_grid': points must satisfy |z| < 1");
    }
  }
}

ExperimentSpec spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ContractViolation("experiment spec must be a JSON object");
  ExperimentSpec spec;
  const auto field = [&](const char* key) -> const nlohmann::json& {
    if (!j.contains(key)) throw ContractViolation(std::string("field '") + key + "': missing");
    return j.at(key);
  };
  try {
    spec.name = j.value("name", std::string("experiment"));
    const auto model = parse_model(field("model").get<std::string>());
    if (!model) throw ContractViolation("field 'model': unknown model");
    spec.model = *model;
    spec.sizes = field("sizes").get<std::vector<std::size_t>>();
    spec.trials = field("trials").get<std::size_t>();
    spec.seed = field("seed").get<std::uint64_t>();
    spec.statistics = field("statistics").get<std::vector<std::string>>();
    if (j.contains("z_grid")) {
      std::vector<cplx> grid;
      for (const auto& p : j.at("z_grid")) {
        if (!p.is_array() || p.size() != 2) {
          throw ContractViolation("field 'z_grid': entries must be [re, im] pairs");
        }
        grid.emplace_back(p[0].get<double>(), p[1].get<double>());
      }
      spec.z_grid = std::move(grid);
    }
    if (j.contains("kac_law")) {
      const auto law = parse_coefficient_law(j.at("kac_law").get<std::string>());
      if (!law) throw ContractViolation("field 'kac_law': unknown coefficient law");
      spec.kac_law = *law;
    }
  } catch (const nlohmann::json::exception& e) {
    throw ContractViolation(std::string("experiment spec: ") + e.what());
  }
  validate(spec);
  return spec;
}

nlohmann::json to_json(const ExperimentSpec& spec) {
  nlohmann::json j;
  j["name"] = spec.name;
  j["model"] = std::string(to_string(spec.model));
  j["sizes"] = spec.sizes;
  j["trials"] = spec.trials;
  j["seed"] = spec.seed;
  j["statistics"] = spec.statistics;
  if (spec.z_grid) {
    nlohmann::json grid = nlohmann::json::array();
    for (const auto& z : *spec.z_grid) grid.push_back({z.real(), z.imag()});
    j["z_grid"] = grid;
  }
  if (spec.model == Model::Kac) j["kac_law"] = std::string(to_string(spec.kac_law));
  return j;
}

bool needs_critical_points(const ExperimentSpec& spec) {
  return std::any_of(spec.statistics.begin(), spec.statistics.end(), [](const std::string& name) {
    const auto st = parse_stat(name);
    if (!st) return false;
    switch (st->kind) {
      case StatKind::RootTrigMoment:
      case StatKind::ConditionI:
      case StatKind::ConditionII:
      case StatKind::AbsLogL:
      case StatKind::LevySemicircle:
      case StatKind::AnnulusFraction:
        return false;
      default:
        return true;
    }
  });
}

TrialSample sample_trial(const ExperimentSpec& spec, std::size_t n, RngStream& rng,
                         bool with_critical) {
  TrialSample s;
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  switch (spec.model) {
    case Model::HaarO:
    case Model::HaarSO:
    case Model::HaarU:
    case Model::HaarSp: {
      const GroupKind kind = *group_of(spec.model);
      s.angles = char_poly_angles(haar_sample(kind, n, rng), kind);
      break;
    }
    case Model::IidUniform:
      s.angles = iid_uniform_angles(n, rng);
      break;
    case Model::ConjugatePairs:
      s.angles = conjugate_pair_angles(n / 2, rng, n % 2 != 0);
      break;
    case Model::Wigner: {
      std::vector<double> eig = hermitian_eigenvalues(sample_wigner(n, rng));
      for (double& x : eig) x *= inv_sqrt_n;
      for (double x : eig) s.roots.roots.emplace_back(x, 0.0);
      s.real_roots = std::move(eig);
      break;
    }
    case Model::GinibreReal: {
      const Spectrum spec_values = eigenvalues(sample_ginibre_real(n, rng));
      for (const auto& z : spec_values.values) s.roots.roots.push_back(z * inv_sqrt_n);
      break;
    }
    case Model::Kac:
      s.roots = roots_from_coeffs(kac_polynomial(n, rng, spec.kac_law));
      break;
  }
  if (s.angles) s.roots = s.angles->roots();
  if (with_critical) {
    s.crit = critical_points_from_roots(s.roots);
    if (s.real_roots) s.real_crit = real_parts_sorted(s.crit.points);
  }
  return s;
}

std::vector<std::string> statistic_keys(const ExperimentSpec& spec) {
  std::vector<std::string> keys;
  const std::size_t grid_size = grid_of(spec).size();
  for (const auto& name : spec.statistics) {
    const auto st = parse_stat(name);
    if (!st) throw LookupError("unknown statistic '" + name + "'");
    if (st->per_z) {
      for (std::size_t k = 0; k < grid_size; ++k) keys.push_back(name + "@z" + std::to_string(k));
    } else {
      keys.push_back(name);
    }
  }
  return keys;
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Decreasing: return "decreasing";
    case Verdict::Flat: return "flat";
    case Verdict::Increasing: return "increasing";
  }
  return "unknown";
}

const CellSummary& ConvergenceReport::cell(std::string_view statistic, std::size_t n) const {
  for (const auto& c : cells) {
    if (c.statistic == statistic && c.n == n) return c;
  }
  throw LookupError("no cell for statistic '" + std::string(statistic) + "' at n=" +
                    std::to_string(n));
}

std::vector<double> ConvergenceReport::medians(std::string_view statistic) const {
  std::vector<double> m;
  for (const auto& c : cells) {
    if (c.statistic == statistic) m.push_back(c.q50);
  }
  if (m.empty()) throw LookupError("unknown statistic '" + std::string(statistic) + "'");
  return m;
}

std::vector<double> ConvergenceReport::values(std::string_view statistic, std::size_t n) const {
  std::vector<double> v;
  for (const auto& r : raw) {
    if (r.statistic == statistic && r.n == n) v.push_back(r.value);
  }
  if (v.empty()) throw LookupError("no values for '" + std::string(statistic) + "'");
  return v;
}

double quantile(std::vector<double> values, double p) {
  if (values.empty()) throw ContractViolation("quantile of an empty sample");
  std::sort(values.begin(), values.end());
  const double pos = p * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  if (frac == 0.0 || values[lo] == values[hi]) return values[lo];
  return values[lo] + frac * (values[hi] - values[lo]);
}

std::size_t default_thread_count() {
  if (const char* env = std::getenv("CRITLAB_THREADS")) {
    std::size_t value = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc{} && ptr == s.data() + s.size() && value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = default_thread_count();
  threads = std::min(threads, count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  const auto worker = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) break;
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
        failed.store(true);
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

ConvergenceReport run_experiment(const ExperimentSpec& spec, RunOptions options) {
  validate(spec);
  const std::vector<std::string> keys = statistic_keys(spec);
  const std::vector<cplx> grid = grid_of(spec);
  const std::size_t tasks = spec.sizes.size() * spec.trials;
  const bool with_critical = needs_critical_points(spec);
  std::vector<std::vector<double>> results(tasks);

  parallel_for(tasks, options.threads, [&](std::size_t task) {
    const std::size_t size_index = task / spec.trials;
    const std::size_t trial = task % spec.trials;
    const std::size_t n = spec.sizes[size_index];
    const std::string where =
        " [size=" + std::to_string(n) + ", trial=" + std::to_string(trial) + "]";
    try {
      RngStream rng(spec.seed, mix_stream(size_index, trial));
      const TrialSample s = sample_trial(spec, n, rng, with_critical);
      results[task] = evaluate_trial(spec, grid, s);
    } catch (const NumericFailure& e) {
      throw NumericFailure(e.what() + where, e.dim());
    } catch (const Error& e) {
      throw ContractViolation(e.what() + where);
    }
  });

  ConvergenceReport report;
  report.spec = spec;
  report.statistics = keys;
  for (std::size_t task = 0; task < tasks; ++task) {
    const std::size_t n = spec.sizes[task / spec.trials];
    const std::size_t trial = task % spec.trials;
    for (std::size_t k = 0; k < keys.size(); ++k) {
      report.raw.push_back({keys[k], n, trial, results[task][k]});
    }
  }
  for (std::size_t k = 0; k < keys.size(); ++k) {
    for (std::size_t si = 0; si < spec.sizes.size(); ++si) {
      std::vector<double> v(spec.trials);
      for (std::size_t t = 0; t < spec.trials; ++t) v[t] = results[si * spec.trials + t][k];
      CellSummary c;
      c.statistic = keys[k];
      c.n = spec.sizes[si];
      c.count = v.size();
      c.q10 = quantile(v, 0.1);
      c.q50 = quantile(v, 0.5);
      c.q90 = quantile(v, 0.9);
      double sum = 0.0;
      for (double x : v) sum += x;
      c.mean = sum / static_cast<double>(v.size());
      c.max = *std::max_element(v.begin(), v.end());
      report.cells.push_back(c);
    }
  }
  if (spec.sizes.size() >= 2) {
    for (const auto& key : keys) report.trends[key] = trend_check(report, key);
  }

  nlohmann::json grid_json = nlohmann::json::array();
  for (const auto& z : grid) grid_json.push_back({z.real(), z.imag()});
  report.metadata = {
      {"version", kVersion},
      {"log_convention", "natural log: N = floor((ln n)^2)"},
      {"z_grid", grid_json},
      {"z_grid_note", "grid statistics are samples at fixed z, not almost-everywhere certificates"},
      {"weak_convergence_note", "convergence on the circle is certified through trig moments"},
      {"thresholds", "all numeric thresholds are pilot-derived"},
      {"quantiles", "linear interpolation between order statistics"},
  };
  validate_report(report);
  return report;
}

Verdict trend_of(const std::vector<double>& medians) {
  if (medians.size() < 2) throw ContractViolation("trend needs at least two sizes");
  bool decreasing = true;
  for (std::size_t i = 1; i < medians.size(); ++i) {
    if (!(medians[i] < medians[i - 1])) decreasing = false;
  }
  if (decreasing) return Verdict::Decreasing;
  const double ref = medians.front();
  const double band = 0.1 * std::abs(ref);
  const bool flat = std::all_of(medians.begin(), medians.end(),
                                [&](double m) { return std::abs(m - ref) <= band; });
  return flat ? Verdict::Flat : Verdict::Increasing;
}

Verdict trend_check(const ConvergenceReport& report, std::string_view statistic) {
  return trend_of(report.medians(statistic));
}

void validate_report(const ConvergenceReport& report) {
  for (const auto& c : report.cells) {
    if (c.count != report.spec.trials) {
      throw ContractViolation("report cell '" + c.statistic + "' has the wrong value count");
    }
    if (!(c.q10 <= c.q50 && c.q50 <= c.q90)) {
      // NaN from infinite values also lands here
      throw ContractViolation("report cell '" + c.statistic + "' has unordered quantiles");
    }
  }
}

nlohmann::json to_json(const ConvergenceReport& report) {
  nlohmann::json j;
  j["spec"] = to_json(report.spec);
  j["statistics"] = report.statistics;
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : report.cells) {
    cells.push_back({{"statistic", c.statistic},
                     {"n", c.n},
                     {"count", c.count},
                     {"q10", c.q10},
                     {"q50", c.q50},
                     {"q90", c.q90},
                     {"mean", c.mean},
                     {"max", c.max}});
  }
  j["cells"] = cells;
  nlohmann::json trends = nlohmann::json::object();
  for (const auto& [k, v] : report.trends) trends[k] = std::string(to_string(v));
  j["trends"] = trends;
  j["metadata"] = report.metadata;
  return j;
}

void write_raw_csv(std::ostream& out, const ConvergenceReport& report) {
  out << "stat,size,trial,value\n";
  for (const auto& r : report.raw) {
    out << r.statistic << ',' << r.n << ',' << r.trial << ',' << format_double(r.value) << '\n';
  }
}

double trace_limit_variance(GroupKind kind, std::size_t j) noexcept {
  const double jd = static_cast<double>(j);
  return kind == GroupKind::Unitary ? 0.5 * jd : jd;
}

std::vector<double> clt_trace_experiment(GroupKind kind, std::size_t n, std::size_t j_max,
                                         std::size_t trials, std::uint64_t seed,
                                         bool apply_correction, RunOptions options) {
  if (j_max == 0 || trials == 0) throw ContractViolation("clt: j_max and trials must be positive");
  if (n < 4 * j_max + 1) throw ContractViolation("clt: requires n >= 4 j_max + 1");
  if (kind == GroupKind::Symplectic && n % 2 != 0) {
    throw InvalidDimension("symplectic dimension must be even");
  }
  std::vector<std::vector<double>> samples(j_max, std::vector<double>(trials));
  parallel_for(trials, options.threads, [&](std::size_t t) {
    RngStream rng(seed, mix_stream(kCltTrialTag, t));
    const auto traces = corrected_traces(haar_sample(kind, n, rng), kind, j_max);
    for (std::size_t j = 0; j < j_max; ++j) {
      double v = traces[j].value.real();
      if (!apply_correction) v -= traces[j].correction;
      samples[j][t] = v;
    }
  });
  std::vector<double> distances;
  distances.reserve(j_max);
  for (std::size_t j = 1; j <= j_max; ++j) {
    RngStream ref(seed, mix_stream(kCltGaussTag, j));
    const double sd = std::sqrt(trace_limit_variance(kind, j));
    std::vector<double> gauss(trials);
    for (auto& g : gauss) g = sd * ref.normal();
    distances.push_back(wasserstein1_empirical(samples[j - 1], std::move(gauss)));
  }
  return distances;
}

double gaussian_control_distance(double variance, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw ContractViolation("control: trials must be positive");
  RngStream a(seed, mix_stream(kControlTag, 0));
  RngStream b(seed, mix_stream(kControlTag, 1));
  const double sd = std::sqrt(variance);
  std::vector<double> xs(trials);
  std::vector<double> ys(trials);
  for (auto& x : xs) x = sd * a.normal();
  for (auto& y : ys) y = sd * b.normal();
  return wasserstein1_empirical(std::move(xs), std::move(ys));
}

}  // namespace critlab

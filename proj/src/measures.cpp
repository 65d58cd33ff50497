#include "critlab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

namespace critlab {

cplx trig_moment(const AngleSample& a, int m) {
  if (m == 0) throw ContractViolation("trig_moment: m must be nonzero");
  if (a.empty()) throw ContractViolation("trig_moment: empty sample");
  cplx sum = 0.0;
  for (double t : a.angles()) sum += std::polar(1.0, static_cast<double>(m) * t);
  return sum / static_cast<double>(a.size());
}

PolarForm polar_decompose(const ComplexMeasure& points) {
  std::vector<double> phi;
  std::vector<double> r;
  phi.reserve(points.size());
  r.reserve(points.size());
  for (const auto& z : points.atoms()) {
    const double mag = std::abs(z);
    r.push_back(mag);
    phi.push_back(mag == 0.0 ? 0.0 : wrap_angle(std::arg(z)));
  }
  return {AngleSample(std::move(phi)), std::move(r)};
}

double radial_deficit(const std::vector<double>& radii) {
  if (radii.empty()) throw ContractViolation("radial_deficit: empty input");
  double sum = 0.0;
  for (double r : radii) sum += 1.0 - r;
  return sum / static_cast<double>(radii.size());
}

Cdf empirical_cdf(const RealMeasure& mu) {
  auto sorted = std::make_shared<std::vector<double>>(mu.atoms());
  std::sort(sorted->begin(), sorted->end());
  const double n = static_cast<double>(sorted->size());
  Cdf cdf;
  cdf.value = [sorted, n](double x) {
    return static_cast<double>(std::upper_bound(sorted->begin(), sorted->end(), x) -
                               sorted->begin()) / n;
  };
  cdf.left_limit = [sorted, n](double x) {
    return static_cast<double>(std::lower_bound(sorted->begin(), sorted->end(), x) -
                               sorted->begin()) / n;
  };
  cdf.jumps = *sorted;
  cdf.jumps.erase(std::unique(cdf.jumps.begin(), cdf.jumps.end()), cdf.jumps.end());
  return cdf;
}

Cdf continuous_cdf(std::function<double(double)> f) {
  Cdf cdf;
  cdf.value = f;
  cdf.left_limit = std::move(f);
  return cdf;
}

namespace {

bool levy_condition_holds(const Cdf& f, const Cdf& g, const std::vector<double>& base,
                          double eps, std::vector<double>& scratch) {
  scratch.assign(base.begin(), base.end());
  for (double x : g.jumps) {
    scratch.push_back(x - eps);
    scratch.push_back(x + eps);
  }
  std::sort(scratch.begin(), scratch.end());

  const auto ok_right = [&](double x) {
    const double fx = f.value(x);
    return g.value(x - eps) - eps <= fx && fx <= g.value(x + eps) + eps;
  };
  const auto ok_left = [&](double x) {
    const double fx = f.left_limit(x);
    return g.left_limit(x - eps) - eps <= fx && fx <= g.left_limit(x + eps) + eps;
  };

  if (scratch.empty()) return ok_right(0.0);
  if (!ok_right(scratch.front() - 1.0) || !ok_right(scratch.back() + 1.0)) return false;
  for (std::size_t i = 0; i < scratch.size(); ++i) {
    const double x = scratch[i];
    if (!ok_right(x) || !ok_left(x)) return false;
    if (i + 1 < scratch.size() && !ok_right(0.5 * (x + scratch[i + 1]))) return false;
  }
  return true;
}

}  // namespace

double levy_distance(const Cdf& f, const Cdf& g, const std::vector<double>& extra_points) {
  std::vector<double> base = f.jumps;
  base.insert(base.end(), extra_points.begin(), extra_points.end());
  std::vector<double> scratch;
  if (levy_condition_holds(f, g, base, 0.0, scratch)) return 0.0;
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > 1e-15) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (levy_condition_holds(f, g, base, mid, scratch)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double levy_distance(const RealMeasure& mu, const RealMeasure& nu) {
  return levy_distance(empirical_cdf(mu), empirical_cdf(nu));
}

double wasserstein1_empirical(std::vector<double> xs, std::vector<double> ys) {
  if (xs.empty() || ys.empty()) throw ContractViolation("wasserstein1: empty sample");
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  if (xs.size() == ys.size()) {
    double sum = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) sum += std::abs(xs[k] - ys[k]);
    return sum / static_cast<double>(xs.size());
  }
  // Quantile functions are constant between the merged breakpoints k/n, l/m.
  const std::size_t n = xs.size();
  const std::size_t m = ys.size();
  double total = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  double t = 0.0;
  while (i < n && j < m) {
    const double next_x = static_cast<double>(i + 1) / static_cast<double>(n);
    const double next_y = static_cast<double>(j + 1) / static_cast<double>(m);
    const double next = std::min(next_x, next_y);
    total += std::abs(xs[i] - ys[j]) * (next - t);
    t = next;
    // integer comparison avoids drift in the breakpoint order
    const std::size_t lhs = (i + 1) * m;
    const std::size_t rhs = (j + 1) * n;
    if (lhs <= rhs) ++i;
    if (rhs <= lhs) ++j;
  }
  return total;
}

double semicircle_density(double x) noexcept {
  if (x <= -2.0 || x >= 2.0) return 0.0;
  return std::sqrt(4.0 - x * x) / (2.0 * std::numbers::pi);
}

double semicircle_cdf(double x) noexcept {
  if (x <= -2.0) return 0.0;
  if (x >= 2.0) return 1.0;
  const double f = 0.5 + x * std::sqrt(4.0 - x * x) / (4.0 * std::numbers::pi) +
                   std::asin(0.5 * x) / std::numbers::pi;
  return std::clamp(f, 0.0, 1.0);
}

double semicircle_quantile(double u) {
  if (!(u >= 0.0 && u <= 1.0)) throw ContractViolation("semicircle_quantile: u outside [0, 1]");
  double lo = -2.0;
  double hi = 2.0;
  for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (semicircle_cdf(mid) < u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double levy_to_semicircle(const std::vector<double>& sample) {
  std::vector<double> grid;
  grid.reserve(5001);
  for (int k = -2500; k <= 2500; ++k) grid.push_back(static_cast<double>(k) * 1e-3);
  return levy_distance(empirical_cdf(RealMeasure(sample)), continuous_cdf(semicircle_cdf), grid);
}

}  // namespace critlab

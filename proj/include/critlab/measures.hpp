#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "critlab/errors.hpp"
#include "critlab/root_models.hpp"

namespace critlab {

/// Uniform weights on a list of atoms; repeated atoms carry multiplicity.
template <typename T>
class EmpiricalMeasure {
 public:
  explicit EmpiricalMeasure(std::vector<T> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw ContractViolation("empirical measure needs at least one atom");
  }

  const std::vector<T>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  double weight() const noexcept { return 1.0 / static_cast<double>(atoms_.size()); }

 private:
  std::vector<T> atoms_;
};

using RealMeasure = EmpiricalMeasure<double>;
using ComplexMeasure = EmpiricalMeasure<cplx>;

/// (1/n) sum_j e^{i m theta_j}. m = 0 is rejected.
cplx trig_moment(const AngleSample& a, int m);

struct PolarForm {
  AngleSample angles;
  std::vector<double> radii;
};

/// z_j = r_j e^{i phi_j}, phi in [0, 2pi), phi = 0 at the origin.
PolarForm polar_decompose(const ComplexMeasure& points);

/// Mean of (1 - r_j).
double radial_deficit(const std::vector<double>& radii);

/// A distribution function on the real line, described by its value and left
/// limit at every point and the points where it may jump.
struct Cdf {
  std::function<double(double)> value;
  std::function<double(double)> left_limit;
  std::vector<double> jumps;
};

/// Step CDF of an empirical measure.
Cdf empirical_cdf(const RealMeasure& mu);

/// A continuous CDF (left limit equals value, no jumps).
Cdf continuous_cdf(std::function<double(double)> f);

/// Levy distance: the least eps with G(x-eps) - eps <= F(x) <= G(x+eps) + eps
/// for all x. For step functions the condition only changes at jump points of
/// F and shifted jump points of G, so it is checked there (value and left
/// limit) plus at `extra_points`, and eps is found by bisection.
double levy_distance(const Cdf& f, const Cdf& g, const std::vector<double>& extra_points = {});
double levy_distance(const RealMeasure& mu, const RealMeasure& nu);

/// W1 between two samples. Equal sizes use the sorted coupling; otherwise
/// the quantile functions are integrated exactly.
double wasserstein1_empirical(std::vector<double> xs, std::vector<double> ys);

double semicircle_density(double x) noexcept;
double semicircle_cdf(double x) noexcept;
/// Inverse of semicircle_cdf on [0, 1].
double semicircle_quantile(double u);

/// levy_distance from the empirical CDF of `sample` to the semicircle law,
/// checking the empirical jumps and a 1e-3 grid on [-2.5, 2.5].
double levy_to_semicircle(const std::vector<double>& sample);

}  // namespace critlab

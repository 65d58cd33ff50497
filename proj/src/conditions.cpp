#include "critlab/conditions.hpp"

#include <cmath>
#include <numbers>

#include "critlab/eigen.hpp"
#include "critlab/errors.hpp"

namespace critlab {

TruncationLength::TruncationLength(std::size_t n) : n_(n), terms_(0) {
  if (n == 0) throw InvalidDimension("truncation length needs n >= 1");
  const double l = std::log(static_cast<double>(n));
  terms_ = static_cast<std::size_t>(std::floor(l * l));
}

double condition_i_stat(const AngleSample& a) {
  if (a.empty()) throw ContractViolation("condition_i_stat: empty sample");
  return std::abs(t_sum(a, 0));
}

cplx t_sum(const AngleSample& a, std::size_t m) {
  const double k = static_cast<double>(m + 1);
  cplx sum = 0.0;
  for (double t : a.angles()) sum += std::polar(1.0, -k * t);
  return sum;
}

double condition_ii_stat(const AngleSample& a, cplx z) {
  if (!(std::abs(z) < 1.0)) throw ContractViolation("condition_ii_stat: requires |z| < 1");
  if (a.empty()) throw ContractViolation("condition_ii_stat: empty sample");
  const std::size_t terms = TruncationLength(a.size()).terms();
  // sum_j w_j sum_{m=0}^{N} (z w_j)^m with w_j = e^{-i theta_j}
  cplx total = 0.0;
  for (double t : a.angles()) {
    const cplx w = std::polar(1.0, -t);
    const cplx zw = z * w;
    cplx power = 1.0;
    cplx partial = 0.0;
    for (std::size_t m = 0; m <= terms; ++m) {
      partial += power;
      power *= zw;
    }
    total += w * partial;
  }
  return std::abs(total);
}

cplx log_derivative(const AngleSample& a, cplx z) {
  cplx sum = 0.0;
  for (double t : a.angles()) {
    const cplx d = z - std::polar(1.0, t);
    if (std::abs(d) <= 1e-12) throw PoleProximity("log_derivative: z is within 1e-12 of a root");
    sum += 1.0 / d;
  }
  return sum;
}

double normalized_log_abs_L(const AngleSample& a, cplx z) {
  if (a.empty()) throw ContractViolation("normalized_log_abs_L: empty sample");
  const double mag = std::abs(log_derivative(a, z));
  if (mag <= 1e-300) return kNegativeInfinity;
  return std::log(mag) / static_cast<double>(a.size());
}

int trace_correction(GroupKind kind, std::size_t j) noexcept {
  if (j % 2 != 0) return 0;
  switch (kind) {
    case GroupKind::Orthogonal:
    case GroupKind::SpecialOrthogonal: return -1;
    case GroupKind::Symplectic: return 1;
    case GroupKind::Unitary: return 0;
  }
  return 0;
}

std::vector<CorrectedTrace> corrected_traces(const SquareMatrix& m, GroupKind kind,
                                             std::size_t j_max) {
  if (j_max == 0) throw ContractViolation("corrected_trace: j must be positive");
  const double residual = membership_residual(m, kind);
  if (!(residual <= 1e-8 * static_cast<double>(m.dim()))) {
    throw ContractViolation("corrected_trace: matrix is not a member of the group");
  }
  const Spectrum spec = eigenvalues(m);
  std::vector<cplx> powers(spec.values.begin(), spec.values.end());
  std::vector<CorrectedTrace> out;
  out.reserve(j_max);
  for (std::size_t j = 1; j <= j_max; ++j) {
    cplx tr = 0.0;
    for (std::size_t k = 0; k < powers.size(); ++k) {
      tr += powers[k];
      powers[k] *= spec.values[k];
    }
    const int corr = trace_correction(kind, j);
    out.push_back({kind, j, tr + static_cast<double>(corr), corr});
  }
  return out;
}

CorrectedTrace corrected_trace(const SquareMatrix& m, GroupKind kind, std::size_t j) {
  return corrected_traces(m, kind, j).back();
}

std::vector<cplx> default_z_grid() {
  constexpr double pi = std::numbers::pi;
  const double radii[] = {0.2, 0.5, 0.8};
  const double args[] = {0.0, pi / 3.0, pi / 2.0, 5.0 * pi / 4.0};
  std::vector<cplx> grid;
  for (double r : radii)
    for (double t : args) grid.push_back(std::polar(r, t));
  return grid;
}

}  // namespace critlab

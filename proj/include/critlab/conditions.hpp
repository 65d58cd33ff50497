#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "critlab/ensembles.hpp"
#include "critlab/root_models.hpp"

namespace critlab {

/// N = floor((ln n)^2), the number of terms kept in the truncated series.
class TruncationLength {
 public:
  explicit TruncationLength(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t terms() const noexcept { return terms_; }

 private:
  std::size_t n_;
  std::size_t terms_;
};

/// |sum_j e^{-i theta_j}|, unnormalized.
double condition_i_stat(const AngleSample& a);

/// T_m = sum_j e^{-i theta_j (m + 1)}.
cplx t_sum(const AngleSample& a, std::size_t m);

/// |sum_{m=0}^{N} z^m T_m| with N from TruncationLength(n). Requires |z| < 1.
double condition_ii_stat(const AngleSample& a, cplx z);

/// L_n(z) = p'(z)/p(z) = sum_j 1 / (z - e^{i theta_j}). Throws PoleProximity
/// when z is within 1e-12 of a root.
cplx log_derivative(const AngleSample& a, cplx z);

inline constexpr double kNegativeInfinity = -std::numeric_limits<double>::infinity();

/// (1/n) log|L_n(z)|; returns kNegativeInfinity when |L_n(z)| <= 1e-300,
/// i.e. z sits on a critical point.
double normalized_log_abs_L(const AngleSample& a, cplx z);

struct CorrectedTrace {
  GroupKind group;
  std::size_t j;
  cplx value;
  int correction;
};

/// Parity correction applied to tr(M^j): -1 for O/SO with even j, +1 for Sp
/// with even j, 0 otherwise.
int trace_correction(GroupKind kind, std::size_t j) noexcept;

/// tr(M^j) + correction, with tr(M^j) taken as sum of lambda^j over the
/// spectrum. Throws ContractViolation if M fails membership at 1e-8 dim.
CorrectedTrace corrected_trace(const SquareMatrix& m, GroupKind kind, std::size_t j);

/// The same for every j in 1..j_max from one eigendecomposition.
std::vector<CorrectedTrace> corrected_traces(const SquareMatrix& m, GroupKind kind,
                                             std::size_t j_max);

/// The fixed 12-point grid: radii {0.2, 0.5, 0.8} x args {0, pi/3, pi/2, 5pi/4}.
std::vector<cplx> default_z_grid();

}  // namespace critlab

#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "critlab/matrix.hpp"

namespace critlab {

/// Monic polynomial prod (z - x_j), stored by its roots.
struct RootForm {
  std::vector<cplx> roots;

  std::size_t degree() const noexcept { return roots.size(); }
};

/// Polynomial in ascending coefficient order; trailing zeros are trimmed.
class CoeffPoly {
 public:
  explicit CoeffPoly(std::vector<cplx> coeffs);

  const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  cplx leading() const noexcept { return coeffs_.back(); }

  cplx operator()(cplx z) const noexcept;

 private:
  std::vector<cplx> coeffs_;
};

/// Critical points y_1..y_{n-1} of a degree-n polynomial.
struct CriticalSet {
  std::vector<cplx> points;
};

CoeffPoly coeffs_from_roots(const RootForm& p);

/// k-fold formal derivative; k = 0 returns p. Throws DegenerateResult when
/// k > degree.
CoeffPoly derivative(const CoeffPoly& p, std::size_t k = 1);

/// Roots as eigenvalues of the (balanced) Frobenius companion matrix.
RootForm roots_from_coeffs(const CoeffPoly& p);

/// The (n-1) x (n-1) matrix D (I - J/n) + (x_n/n) J with D = diag(x_1..x_{n-1})
/// and J all-ones, whose eigenvalues are the critical points of prod (z - x_j).
SquareMatrix critical_point_matrix(const RootForm& p);

/// Critical points via the eigenvalues of critical_point_matrix. The last
/// stored root plays the role of x_n. Throws DegenerateResult for degree < 2.
CriticalSet critical_points_from_roots(const RootForm& p);

/// Default hull tolerance, 1e-9 (1 + max|root|).
double default_hull_tolerance(const RootForm& roots);

/// True iff every critical point is within `tol` of the convex hull of the
/// roots. Collinear or coincident roots are handled as a segment or point.
bool gauss_lucas_check(const RootForm& roots, const CriticalSet& crit, double tol);

/// Distance from `z` to the convex hull of `points`.
double distance_to_hull(const std::vector<cplx>& points, cplx z);

/// Open real interval (lo, hi).
struct OpenInterval {
  double lo;
  double hi;
};

/// |#roots in I - #critical points in I| for ascending real lists.
std::size_t interlacing_defect(const std::vector<double>& real_roots,
                               const std::vector<double>& real_crit, OpenInterval interval);

/// Greedy bipartite matching on |a_i - b_j|: repeatedly pairs the closest
/// unmatched pair and reports the largest distance used. Sizes must agree.
double matching_distance(const std::vector<cplx>& a, const std::vector<cplx>& b);

/// Two-column CSV "re,im" with header.
void write_points_csv(std::ostream& out, const std::vector<cplx>& points);
std::vector<cplx> read_points_csv(std::istream& in);

}  // namespace critlab

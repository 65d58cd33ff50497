#include "critlab/polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

#include "critlab/eigen.hpp"
#include "critlab/errors.hpp"
#include "critlab/format.hpp"

namespace critlab {

CoeffPoly::CoeffPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == cplx(0.0)) coeffs_.pop_back();
  if (coeffs_.empty()) throw DegenerateResult("zero polynomial");
}

cplx CoeffPoly::operator()(cplx z) const noexcept {
  cplx acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

CoeffPoly coeffs_from_roots(const RootForm& p) {
  if (p.roots.empty()) throw DegenerateResult("polynomial needs at least one root");
  std::vector<cplx> c{1.0};
  for (const cplx& x : p.roots) {
    // c(z) <- (z - x) c(z)
    c.push_back(0.0);
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - x * c[i];
    c[0] = -x * c[0];
  }
  return CoeffPoly(std::move(c));
}

CoeffPoly derivative(const CoeffPoly& p, std::size_t k) {
  if (k > p.degree()) {
    throw DegenerateResult("derivative order exceeds degree");
  }
  std::vector<cplx> c = p.coeffs();
  for (std::size_t step = 0; step < k; ++step) {
    std::vector<cplx> next(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) next[i - 1] = static_cast<double>(i) * c[i];
    c = std::move(next);
  }
  return CoeffPoly(std::move(c));
}

RootForm roots_from_coeffs(const CoeffPoly& p) {
  const std::size_t n = p.degree();
  if (n == 0) throw DegenerateResult("constant polynomial has no roots");
  const auto& c = p.coeffs();
  const cplx lead = p.leading();
  SquareMatrix companion(n);
  for (std::size_t j = 0; j < n; ++j) companion(0, j) = -c[n - 1 - j] / lead;
  for (std::size_t i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  return RootForm{eigenvalues(companion).values};
}

SquareMatrix critical_point_matrix(const RootForm& p) {
  const std::size_t n = p.degree();
  if (n < 2) throw DegenerateResult("degree must be >= 2 to have critical points");
  const std::size_t m = n - 1;
  const double inv_n = 1.0 / static_cast<double>(n);
  const cplx last = p.roots.back() * inv_n;
  SquareMatrix a(m);
  for (std::size_t i = 0; i < m; ++i) {
    const cplx xi = p.roots[i];
    const cplx off = last - xi * inv_n;
    for (std::size_t j = 0; j < m; ++j) a(i, j) = off;
    a(i, i) += xi;
  }
  return a;
}

CriticalSet critical_points_from_roots(const RootForm& p) {
  if (p.degree() < 2) throw DegenerateResult("degree must be >= 2 to have critical points");
  return CriticalSet{eigenvalues(critical_point_matrix(p)).values};
}

double default_hull_tolerance(const RootForm& roots) {
  double r = 0.0;
  for (const auto& x : roots.roots) r = std::max(r, std::abs(x));
  return 1e-9 * (1.0 + r);
}

namespace {

double cross(cplx o, cplx a, cplx b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

double segment_distance(cplx a, cplx b, cplx z) {
  const cplx ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(z - a);
  double t = ((z - a) * std::conj(ab)).real() / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(z - (a + t * ab));
}

// Andrew's monotone chain, counter-clockwise, collinear points dropped.
std::vector<cplx> convex_hull(std::vector<cplx> pts) {
  std::sort(pts.begin(), pts.end(), [](const cplx& a, const cplx& b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<cplx> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

double hull_distance(const std::vector<cplx>& hull, cplx z) {
  if (hull.size() == 1) return std::abs(z - hull[0]);
  if (hull.size() == 2) return segment_distance(hull[0], hull[1], z);
  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const cplx a = hull[i];
    const cplx b = hull[(i + 1) % hull.size()];
    if (cross(a, b, z) < 0.0) inside = false;
    best = std::min(best, segment_distance(a, b, z));
  }
  return inside ? 0.0 : best;
}

}  // namespace

double distance_to_hull(const std::vector<cplx>& points, cplx z) {
  if (points.empty()) throw ContractViolation("hull of an empty point set");
  return hull_distance(convex_hull(points), z);
}

bool gauss_lucas_check(const RootForm& roots, const CriticalSet& crit, double tol) {
  if (roots.roots.empty()) throw ContractViolation("hull of an empty root set");
  const std::vector<cplx> hull = convex_hull(roots.roots);
  return std::all_of(crit.points.begin(), crit.points.end(),
                     [&](const cplx& y) { return hull_distance(hull, y) <= tol; });
}

std::size_t interlacing_defect(const std::vector<double>& real_roots,
                               const std::vector<double>& real_crit, OpenInterval interval) {
  const auto count = [&](const std::vector<double>& xs) {
    const auto first = std::upper_bound(xs.begin(), xs.end(), interval.lo);
    const auto last = std::lower_bound(xs.begin(), xs.end(), interval.hi);
    return first < last ? static_cast<std::size_t>(last - first) : std::size_t{0};
  };
  const std::size_t a = count(real_roots);
  const std::size_t b = count(real_crit);
  return a > b ? a - b : b - a;
}

double matching_distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.size() != b.size()) throw ContractViolation("matching requires equal sizes");
  struct Edge {
    double dist;
    std::size_t i;
    std::size_t j;
  };
  std::vector<Edge> edges;
  edges.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) edges.push_back({std::abs(a[i] - b[j]), i, j});
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    return x.dist < y.dist || (x.dist == y.dist && (x.i < y.i || (x.i == y.i && x.j < y.j)));
  });
  std::vector<bool> used_a(a.size(), false);
  std::vector<bool> used_b(b.size(), false);
  double worst = 0.0;
  std::size_t matched = 0;
  for (const Edge& e : edges) {
    if (matched == a.size()) break;
    if (used_a[e.i] || used_b[e.j]) continue;
    used_a[e.i] = used_b[e.j] = true;
    worst = std::max(worst, e.dist);
    ++matched;
  }
  return worst;
}

void write_points_csv(std::ostream& out, const std::vector<cplx>& points) {
  out << "re,im\n";
  for (const auto& z : points) {
    out << format_double(z.real()) << ',' << format_double(z.imag()) << '\n';
  }
}

std::vector<cplx> read_points_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ContractViolation("empty CSV input");
  std::vector<cplx> pts;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw ContractViolation("line " + std::to_string(line_no) + ": expected 're,im'");
    }
    const std::string_view view(line);
    try {
      pts.emplace_back(parse_double(view.substr(0, comma)), parse_double(view.substr(comma + 1)));
    } catch (const ContractViolation& e) {
      throw ContractViolation("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return pts;
}

}  // namespace critlab

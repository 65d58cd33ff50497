#include "critlab/root_models.hpp"

#include <cmath>
#include <ostream>

#include "critlab/eigen.hpp"
#include "critlab/errors.hpp"
#include "critlab/format.hpp"

namespace critlab {

AngleSample::AngleSample(std::vector<double> angles) : angles_(std::move(angles)) {
  for (double t : angles_) {
    if (!(t >= 0.0 && t < kTwoPi)) throw ContractViolation("angle outside [0, 2pi)");
  }
}

RootForm AngleSample::roots() const {
  RootForm r;
  r.roots.reserve(angles_.size());
  for (double t : angles_) r.roots.push_back(std::polar(1.0, t));
  return r;
}

double wrap_angle(double theta) noexcept {
  if (theta < 0.0) theta += kTwoPi;
  // -tiny + 2pi rounds to 2pi; also normalizes -0
  if (theta >= kTwoPi || theta == 0.0) theta = 0.0;
  return theta;
}

AngleSample iid_uniform_angles(std::size_t n, RngStream& rng) {
  if (n == 0) throw InvalidDimension("sample size must be positive");
  std::vector<double> a(n);
  for (auto& t : a) t = kTwoPi * rng.uniform();
  return AngleSample(std::move(a));
}

AngleSample conjugate_pair_angles(const std::vector<double>& thetas,
                                  std::optional<double> extra) {
  std::vector<double> a;
  a.reserve(2 * thetas.size() + 1);
  for (double t : thetas) {
    a.push_back(t);
    a.push_back(t == 0.0 ? 0.0 : kTwoPi - t);
  }
  if (extra) a.push_back(*extra);
  return AngleSample(std::move(a));
}

AngleSample conjugate_pair_angles(std::size_t n_pairs, RngStream& rng, bool extra_odd) {
  if (n_pairs == 0) throw InvalidDimension("need at least one conjugate pair");
  std::vector<double> thetas(n_pairs);
  for (auto& t : thetas) t = kTwoPi * rng.uniform();
  std::optional<double> extra;
  if (extra_odd) extra = kTwoPi * rng.uniform();
  return conjugate_pair_angles(thetas, extra);
}

std::string_view to_string(CoefficientLaw law) noexcept {
  switch (law) {
    case CoefficientLaw::RealGaussian: return "real_gaussian";
    case CoefficientLaw::ComplexGaussian: return "complex_gaussian";
    case CoefficientLaw::Rademacher: return "rademacher";
    case CoefficientLaw::ConstantOne: return "constant_one";
  }
  return "unknown";
}

std::optional<CoefficientLaw> parse_coefficient_law(std::string_view text) noexcept {
  if (text == "real_gaussian") return CoefficientLaw::RealGaussian;
  if (text == "complex_gaussian") return CoefficientLaw::ComplexGaussian;
  if (text == "rademacher") return CoefficientLaw::Rademacher;
  if (text == "constant_one") return CoefficientLaw::ConstantOne;
  return std::nullopt;
}

namespace {

cplx draw_coefficient(RngStream& rng, CoefficientLaw law) {
  switch (law) {
    case CoefficientLaw::RealGaussian:
      return rng.normal();
    case CoefficientLaw::ComplexGaussian: {
      const double re = rng.normal();
      const double im = rng.normal();
      return cplx(re, im) * 0.70710678118654752440;
    }
    case CoefficientLaw::Rademacher:
      return (rng.next_u64() >> 63) != 0 ? 1.0 : -1.0;
    case CoefficientLaw::ConstantOne:
      return 1.0;
  }
  return 0.0;
}

}  // namespace

CoeffPoly kac_polynomial(std::size_t n, RngStream& rng, CoefficientLaw law) {
  if (n == 0) throw InvalidDimension("Kac polynomial degree must be positive");
  std::vector<cplx> c(n + 1);
  for (auto& x : c) x = draw_coefficient(rng, law);
  while (c[n] == cplx(0.0)) c[n] = draw_coefficient(rng, law);
  return CoeffPoly(std::move(c));
}

AngleSample char_poly_angles(const SquareMatrix& m, GroupKind kind) {
  const double residual = membership_residual(m, kind);
  if (!(residual <= 1e-8 * static_cast<double>(m.dim()))) {
    throw ContractViolation("matrix is not a member of group " + std::string(to_string(kind)));
  }
  const Spectrum spec = eigenvalues(m);
  std::vector<double> a;
  a.reserve(spec.values.size());
  for (const auto& z : spec.values) {
    if (std::abs(std::abs(z) - 1.0) > 1e-8) {
      throw ContractViolation("eigenvalue off the unit circle");
    }
    a.push_back(wrap_angle(std::arg(z)));
  }
  return AngleSample(std::move(a));
}

void write_angles_csv(std::ostream& out, const AngleSample& a) {
  out << "theta\n";
  for (double t : a.angles()) out << format_double(t) << '\n';
}

}  // namespace critlab

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "critlab/ensembles.hpp"
#include "critlab/polynomials.hpp"
#include "critlab/rng.hpp"

namespace critlab {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Angles in [0, 2pi).
class AngleSample {
 public:
  AngleSample() = default;
  /// Throws ContractViolation if any angle is outside [0, 2pi).
  explicit AngleSample(std::vector<double> angles);

  const std::vector<double>& angles() const noexcept { return angles_; }
  std::size_t size() const noexcept { return angles_.size(); }
  bool empty() const noexcept { return angles_.empty(); }

  /// The unit-circle roots e^{i theta_j}.
  RootForm roots() const;

 private:
  std::vector<double> angles_;
};

/// Maps arg(z) from (-pi, pi] into [0, 2pi).
double wrap_angle(double theta) noexcept;

AngleSample iid_uniform_angles(std::size_t n, RngStream& rng);

/// {theta_j, 2pi - theta_j} for iid uniform theta_j, plus one unpaired
/// uniform angle when `extra_odd` is set.
AngleSample conjugate_pair_angles(std::size_t n_pairs, RngStream& rng, bool extra_odd);

/// The same construction from given base angles.
AngleSample conjugate_pair_angles(const std::vector<double>& thetas,
                                  std::optional<double> extra = std::nullopt);

enum class CoefficientLaw {
  RealGaussian,
  ComplexGaussian,
  Rademacher,
  ConstantOne,  ///< deterministic hook for tests
};

std::string_view to_string(CoefficientLaw law) noexcept;
std::optional<CoefficientLaw> parse_coefficient_law(std::string_view text) noexcept;

/// sum_{j=0}^{n} xi_j z^j with iid xi_j; a zero leading coefficient is
/// redrawn so the degree is exactly n.
CoeffPoly kac_polynomial(std::size_t n, RngStream& rng, CoefficientLaw law);

/// Eigenvalue arguments of a compact-group matrix. Throws ContractViolation
/// if M fails membership at 1e-8 dim or an eigenvalue is off the unit circle
/// by more than 1e-8.
AngleSample char_poly_angles(const SquareMatrix& m, GroupKind kind);

/// Single-column CSV of radians, header "theta".
void write_angles_csv(std::ostream& out, const AngleSample& a);

}  // namespace critlab

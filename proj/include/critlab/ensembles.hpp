#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "critlab/matrix.hpp"
#include "critlab/rng.hpp"

namespace critlab {

enum class GroupKind { Orthogonal, SpecialOrthogonal, Unitary, Symplectic };

std::string_view to_string(GroupKind kind) noexcept;
std::optional<GroupKind> parse_group_kind(std::string_view text) noexcept;

/// iid N(0,1) real entries, imaginary parts exactly zero.
SquareMatrix sample_real_gaussian_matrix(std::size_t n, RngStream& rng);

/// iid (g1 + i g2)/sqrt(2) entries, so E|Z|^2 = 1.
SquareMatrix sample_complex_gaussian_matrix(std::size_t n, RngStream& rng);

/// Haar-distributed element of the requested compact group.
///
/// O(n) and U(n) come from a Householder QR of a Gaussian matrix with the
/// phases of diag(R) pushed into Q, which makes the factorization unique and
/// Q exactly Haar. SO(n) flips the first row of an O(n) sample when det < 0.
/// Sp(n) orthonormalizes a quaternionic Gaussian matrix with a
/// structure-preserving Gram-Schmidt, so the [[A, B], [-conj(B), conj(A)]]
/// block form holds exactly.
SquareMatrix haar_sample(GroupKind kind, std::size_t n, RngStream& rng);

/// J = [[0, I], [-I, 0]] for even n.
SquareMatrix symplectic_form(std::size_t n);

/// Max-norm residual of the group's defining relations.
///
/// Orthogonal: M M^T - I, M^T M - I, and any imaginary part.
/// SpecialOrthogonal: the orthogonal residual plus |det M - 1|.
/// Unitary: M M^* - I and M^* M - I.
/// Symplectic: the unitary residual and M^T J M - J.
double membership_residual(const SquareMatrix& m, GroupKind kind);

/// Residual of the alternative relation M J M^* = M^* J M = J. This is the
/// centralizer of J inside U(n), not the compact symplectic group; kept as a
/// diagnostic only and never used for validation.
double symplectic_literal_residual(const SquareMatrix& m);

/// Hermitian matrix: complex standard normal above the diagonal, real
/// standard normal on it. Unscaled; divide by sqrt(n) for the semicircle.
SquareMatrix sample_wigner(std::size_t n, RngStream& rng);

/// Real Ginibre matrix drawn from a substream keyed off one draw of `rng`.
SquareMatrix sample_ginibre_real(std::size_t n, RngStream& rng);

}  // namespace critlab

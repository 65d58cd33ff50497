#pragma once

#include <cstddef>
#include <vector>

#include "critlab/matrix.hpp"

namespace critlab {

/// Eigenvalues of a square matrix, with multiplicity, in no particular order.
struct Spectrum {
  std::vector<cplx> values;
  std::size_t source_dim = 0;
  /// |sum(values) - trace(M)| measured when the spectrum was computed.
  double trace_residual = 0.0;
};

/// All eigenvalues of a general complex matrix.
///
/// Balances, reduces to upper Hessenberg form with Householder reflectors and
/// runs single-shift complex QR with Wilkinson shifts and deflation. Throws
/// NumericFailure after 30 n sweeps, or if the eigenvalue sum misses the
/// trace by more than 1e-8 n max|M_ij|.
Spectrum eigenvalues(const SquareMatrix& m);

/// Eigenvalues of a Hermitian matrix in ascending order. Throws
/// ContractViolation if M is not Hermitian to 1e-12 (relative to max|M_ij|
/// when that exceeds one).
std::vector<double> hermitian_eigenvalues(const SquareMatrix& m);

/// Identity residuals of a computed spectrum against its source matrix.
struct SpectrumCheck {
  double trace_residual = 0.0;   ///< |sum(lambda) - tr M|
  double log_det_residual = 0.0; ///< |sum(log|lambda|) - log|det M||
};

SpectrumCheck check_spectrum(const SquareMatrix& m, const Spectrum& spectrum);

}  // namespace critlab

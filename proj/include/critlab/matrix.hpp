#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <vector>

namespace critlab {

using cplx = std::complex<double>;

/// Dense complex n x n matrix, row-major.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t dim);
  SquareMatrix(std::size_t dim, std::vector<cplx> entries);

  static SquareMatrix identity(std::size_t dim);
  static SquareMatrix diagonal(const std::vector<cplx>& diag);

  std::size_t dim() const noexcept { return dim_; }

  cplx& operator()(std::size_t row, std::size_t col) noexcept {
    return data_[row * dim_ + col];
  }
  const cplx& operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * dim_ + col];
  }

  const std::vector<cplx>& entries() const noexcept { return data_; }
  cplx* row(std::size_t r) noexcept { return data_.data() + r * dim_; }
  const cplx* row(std::size_t r) const noexcept { return data_.data() + r * dim_; }

  SquareMatrix transpose() const;
  SquareMatrix adjoint() const;
  SquareMatrix conj() const;

  cplx trace() const noexcept;
  double max_abs() const noexcept;
  bool all_finite() const noexcept;
  bool is_real() const noexcept;

  /// Largest |M_ij - M_ji^*|.
  double hermitian_defect() const noexcept;

  SquareMatrix& operator+=(const SquareMatrix& other);
  SquareMatrix& operator-=(const SquareMatrix& other);
  SquareMatrix& operator*=(cplx scale) noexcept;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b);
SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b);
SquareMatrix operator*(cplx scale, SquareMatrix m);

/// Max-norm of a - b.
double max_abs_diff(const SquareMatrix& a, const SquareMatrix& b);

/// Determinant by LU with partial pivoting.
cplx determinant(const SquareMatrix& m);

/// log|det| by LU with partial pivoting; -inf for singular input.
double log_abs_determinant(const SquareMatrix& m);

/// CSV export: one line per row, (re, im) column pairs, with a header line.
void write_matrix_csv(std::ostream& out, const SquareMatrix& m);

}  // namespace critlab

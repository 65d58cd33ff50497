#include "critlab/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "critlab/errors.hpp"
#include "critlab/format.hpp"

namespace critlab {

SquareMatrix::SquareMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
  if (dim == 0) throw InvalidDimension("matrix dimension must be positive");
}

SquareMatrix::SquareMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (dim == 0) throw InvalidDimension("matrix dimension must be positive");
  if (data_.size() != dim * dim) {
    throw InvalidDimension("entry count must equal dim^2");
  }
}

SquareMatrix SquareMatrix::identity(std::size_t dim) {
  SquareMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

SquareMatrix SquareMatrix::diagonal(const std::vector<cplx>& diag) {
  SquareMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

SquareMatrix SquareMatrix::transpose() const {
  SquareMatrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

SquareMatrix SquareMatrix::adjoint() const {
  SquareMatrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

SquareMatrix SquareMatrix::conj() const {
  SquareMatrix c(*this);
  for (auto& x : c.data_) x = std::conj(x);
  return c;
}

cplx SquareMatrix::trace() const noexcept {
  cplx t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double SquareMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& x : data_) m = std::max(m, std::abs(x));
  return m;
}

bool SquareMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const cplx& x) {
    return std::isfinite(x.real()) && std::isfinite(x.imag());
  });
}

bool SquareMatrix::is_real() const noexcept {
  return std::all_of(data_.begin(), data_.end(),
                     [](const cplx& x) { return x.imag() == 0.0; });
}

double SquareMatrix::hermitian_defect() const noexcept {
  double d = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

SquareMatrix& SquareMatrix::operator+=(const SquareMatrix& other) {
  if (other.dim_ != dim_) throw InvalidDimension("dimension mismatch in +");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

SquareMatrix& SquareMatrix::operator-=(const SquareMatrix& other) {
  if (other.dim_ != dim_) throw InvalidDimension("dimension mismatch in -");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

SquareMatrix& SquareMatrix::operator*=(cplx scale) noexcept {
  for (auto& x : data_) x *= scale;
  return *this;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.dim() != b.dim()) throw InvalidDimension("dimension mismatch in *");
  const std::size_t n = a.dim();
  SquareMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    cplx* ci = c.row(i);
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0)) continue;
      const cplx* bk = b.row(k);
      for (std::size_t j = 0; j < n; ++j) ci[j] += aik * bk[j];
    }
  }
  return c;
}

SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
SquareMatrix operator*(cplx scale, SquareMatrix m) { return m *= scale; }

double max_abs_diff(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.dim() != b.dim()) throw InvalidDimension("dimension mismatch");
  double d = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    d = std::max(d, std::abs(a.entries()[k] - b.entries()[k]));
  return d;
}

namespace {

// In-place LU with partial pivoting; returns sign/phase and log|det|.
struct LuSummary {
  cplx phase = 1.0;
  double log_abs = 0.0;
  bool singular = false;
};

LuSummary lu_summary(SquareMatrix a) {
  const std::size_t n = a.dim();
  LuSummary s;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a(i, k)) > best) {
        best = std::abs(a(i, k));
        piv = i;
      }
    }
    if (best == 0.0) {
      s.singular = true;
      return s;
    }
    if (piv != k) {
      std::swap_ranges(a.row(k), a.row(k) + n, a.row(piv));
      s.phase = -s.phase;
    }
    const cplx pivot = a(k, k);
    s.phase *= pivot / best;
    s.log_abs += std::log(best);
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx factor = a(i, k) / pivot;
      if (factor == cplx(0.0)) continue;
      cplx* ri = a.row(i);
      const cplx* rk = a.row(k);
      for (std::size_t j = k + 1; j < n; ++j) ri[j] -= factor * rk[j];
    }
  }
  return s;
}

}  // namespace

cplx determinant(const SquareMatrix& m) {
  const LuSummary s = lu_summary(m);
  if (s.singular) return 0.0;
  return s.phase * std::exp(s.log_abs);
}

double log_abs_determinant(const SquareMatrix& m) {
  const LuSummary s = lu_summary(m);
  if (s.singular) return -std::numeric_limits<double>::infinity();
  return s.log_abs;
}

void write_matrix_csv(std::ostream& out, const SquareMatrix& m) {
  const std::size_t n = m.dim();
  for (std::size_t j = 0; j < n; ++j) {
    out << (j ? "," : "") << "re" << j << ",im" << j;
  }
  out << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out << (j ? "," : "") << format_double(m(i, j).real()) << ','
          << format_double(m(i, j).imag());
    }
    out << '\n';
  }
}

}  // namespace critlab

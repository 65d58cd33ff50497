#include "critlab/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "critlab/errors.hpp"

namespace critlab {

namespace {

constexpr double kUlp = std::numeric_limits<double>::epsilon();

double abs1(const cplx& z) noexcept { return std::abs(z.real()) + std::abs(z.imag()); }

// Parlett-Reinsch scaling by powers of two; a similarity, so the trace and
// spectrum are unchanged.
void balance(SquareMatrix& a) {
  const std::size_t n = a.dim();
  constexpr double radix = 2.0;
  bool converged = false;
  while (!converged) {
    converged = true;
    for (std::size_t i = 0; i < n; ++i) {
      double col = 0.0;
      double row = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        col += abs1(a(j, i));
        row += abs1(a(i, j));
      }
      if (col == 0.0 || row == 0.0) continue;
      double g = row / radix;
      double f = 1.0;
      const double s = col + row;
      while (col < g) {
        f *= radix;
        col *= radix * radix;
      }
      g = row * radix;
      while (col > g) {
        f /= radix;
        col /= radix * radix;
      }
      if ((col + row) / f < 0.95 * s) {
        converged = false;
        const double inv = 1.0 / f;
        for (std::size_t j = 0; j < n; ++j) a(i, j) *= inv;
        for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
  }
}

void reduce_to_hessenberg(SquareMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<cplx> u(n);
  std::vector<cplx> w(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double norm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) norm2 += std::norm(a(i, k));
    if (norm2 == 0.0) continue;
    const double norm = std::sqrt(norm2);
    const cplx x0 = a(k + 1, k);
    const cplx phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : cplx(1.0);
    const cplx alpha = -phase * norm;
    const std::size_t len = n - k - 1;
    for (std::size_t i = 0; i < len; ++i) u[i] = a(k + 1 + i, k);
    u[0] -= alpha;
    double unorm2 = 0.0;
    for (std::size_t i = 0; i < len; ++i) unorm2 += std::norm(u[i]);
    if (unorm2 == 0.0) continue;
    const double beta = 2.0 / unorm2;

    // Left: rows k+1.., columns k..
    std::fill(w.begin(), w.end(), cplx(0.0));
    for (std::size_t i = 0; i < len; ++i) {
      const cplx ui = std::conj(u[i]);
      const cplx* ai = a.row(k + 1 + i);
      for (std::size_t j = k; j < n; ++j) w[j] += ui * ai[j];
    }
    for (std::size_t i = 0; i < len; ++i) {
      const cplx f = beta * u[i];
      cplx* ai = a.row(k + 1 + i);
      for (std::size_t j = k; j < n; ++j) ai[j] -= f * w[j];
    }
    // Right: all rows, columns k+1..
    for (std::size_t r = 0; r < n; ++r) {
      cplx* ar = a.row(r);
      cplx s = 0.0;
      for (std::size_t i = 0; i < len; ++i) s += ar[k + 1 + i] * u[i];
      s *= beta;
      for (std::size_t i = 0; i < len; ++i) ar[k + 1 + i] -= s * std::conj(u[i]);
    }
    a(k + 1, k) = alpha;
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = 0.0;
  }
}

// Eigenvalues of [[a, b], [c, d]] without cancellation in the smaller one.
std::pair<cplx, cplx> eig2x2(cplx a, cplx b, cplx c, cplx d) {
  const cplx half_tr = 0.5 * (a + d);
  const cplx half_diff = 0.5 * (a - d);
  const cplx disc = std::sqrt(half_diff * half_diff + b * c);
  const cplx l1 = std::abs(half_tr + disc) >= std::abs(half_tr - disc) ? half_tr + disc
                                                                       : half_tr - disc;
  const cplx det = a * d - b * c;
  const cplx l2 = l1 != cplx(0.0) ? det / l1 : half_tr - (l1 - half_tr);
  return {l1, l2};
}

struct Givens {
  double c = 1.0;
  cplx s = 0.0;
};

// [c s; -conj(s) c] [a; b] = [r; 0]
Givens make_givens(cplx a, cplx b) {
  if (b == cplx(0.0)) return {1.0, 0.0};
  if (a == cplx(0.0)) return {0.0, 1.0};
  const double abs_a = std::abs(a);
  const double norm = std::hypot(abs_a, std::abs(b));
  const cplx alpha = a / abs_a;
  return {abs_a / norm, alpha * std::conj(b) / norm};
}

std::vector<cplx> hessenberg_qr(SquareMatrix& h) {
  const std::size_t n = h.dim();
  std::vector<cplx> eig(n);
  std::vector<Givens> rot(n);
  const std::size_t budget = 30 * n;
  std::size_t sweeps = 0;
  std::size_t its = 0;

  double hnorm = 0.0;
  for (const auto& x : h.entries()) hnorm = std::max(hnorm, abs1(x));
  const double tiny = std::numeric_limits<double>::min() / kUlp;

  std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(n) - 1;
  while (hi >= 0) {
    std::ptrdiff_t l = hi;
    while (l > 0) {
      double s = abs1(h(l - 1, l - 1)) + abs1(h(l, l));
      if (s == 0.0) s = hnorm;
      if (abs1(h(l, l - 1)) <= std::max(kUlp * s, tiny)) {
        h(l, l - 1) = 0.0;
        break;
      }
      --l;
    }
    if (l == hi) {
      eig[hi] = h(hi, hi);
      --hi;
      its = 0;
      continue;
    }
    if (l == hi - 1) {
      const auto [l1, l2] = eig2x2(h(l, l), h(l, hi), h(hi, l), h(hi, hi));
      eig[l] = l1;
      eig[hi] = l2;
      hi -= 2;
      its = 0;
      continue;
    }
    if (++sweeps > budget) {
      throw NumericFailure("QR iteration did not converge", n);
    }
    ++its;

    cplx shift;
    if (its % 10 == 0) {
      shift = h(hi, hi) + 0.75 * abs1(h(hi, hi - 1));
    } else {
      const cplx d = h(hi, hi);
      const auto [l1, l2] = eig2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), d);
      shift = std::abs(l1 - d) <= std::abs(l2 - d) ? l1 : l2;
    }

    const auto lo = static_cast<std::size_t>(l);
    const auto top = static_cast<std::size_t>(hi);
    for (std::size_t k = lo; k <= top; ++k) h(k, k) -= shift;
    for (std::size_t k = lo; k < top; ++k) {
      const Givens g = make_givens(h(k, k), h(k + 1, k));
      rot[k] = g;
      cplx* rk = h.row(k);
      cplx* rk1 = h.row(k + 1);
      for (std::size_t j = k; j <= top; ++j) {
        const cplx x = rk[j];
        const cplx y = rk1[j];
        rk[j] = g.c * x + g.s * y;
        rk1[j] = -std::conj(g.s) * x + g.c * y;
      }
      rk1[k] = 0.0;
    }
    for (std::size_t k = lo; k < top; ++k) {
      const Givens g = rot[k];
      const cplx sc = std::conj(g.s);
      const std::size_t last = std::min(k + 1, top);
      for (std::size_t i = lo; i <= last; ++i) {
        cplx* ri = h.row(i);
        const cplx x = ri[k];
        const cplx y = ri[k + 1];
        ri[k] = x * g.c + y * sc;
        ri[k + 1] = -x * g.s + y * g.c;
      }
    }
    for (std::size_t k = lo; k <= top; ++k) h(k, k) += shift;
  }
  return eig;
}

// Householder reduction of a Hermitian matrix to real symmetric tridiagonal
// form (diagonal d, off-diagonal moduli e).
void tridiagonalize(SquareMatrix a, std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = a.dim();
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  std::vector<cplx> u(n);
  std::vector<cplx> p(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t len = n - k - 1;
    double norm2 = 0.0;
    for (std::size_t i = 0; i < len; ++i) norm2 += std::norm(a(k + 1 + i, k));
    const double norm = std::sqrt(norm2);
    const cplx x0 = a(k + 1, k);
    const cplx phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : cplx(1.0);
    const cplx alpha = -phase * norm;
    d[k] = a(k, k).real();
    e[k] = norm;
    for (std::size_t i = 0; i < len; ++i) u[i] = a(k + 1 + i, k);
    u[0] -= alpha;
    double unorm2 = 0.0;
    for (std::size_t i = 0; i < len; ++i) unorm2 += std::norm(u[i]);
    if (unorm2 == 0.0) continue;
    const double beta = 2.0 / unorm2;

    // p = beta A22 u; w = p - (beta/2)(u^* p) u; A22 -= u w^* + w u^*
    cplx upu = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      const cplx* ai = a.row(k + 1 + i) + k + 1;
      cplx s = 0.0;
      for (std::size_t j = 0; j < len; ++j) s += ai[j] * u[j];
      p[i] = beta * s;
      upu += std::conj(u[i]) * p[i];
    }
    const cplx kfac = 0.5 * beta * upu;
    for (std::size_t i = 0; i < len; ++i) p[i] -= kfac * u[i];
    for (std::size_t i = 0; i < len; ++i) {
      cplx* ai = a.row(k + 1 + i) + k + 1;
      const cplx ui = u[i];
      const cplx wi = p[i];
      for (std::size_t j = 0; j < len; ++j) {
        ai[j] -= ui * std::conj(p[j]) + wi * std::conj(u[j]);
      }
    }
  }
  if (n >= 2) {
    d[n - 2] = a(n - 2, n - 2).real();
    e[n - 2] = std::abs(a(n - 1, n - 2));
  }
  d[n - 1] = a(n - 1, n - 1).real();
}

// Implicit QL with Wilkinson shifts on a symmetric tridiagonal matrix.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = d.size();
  const std::size_t budget = 30 * n;
  std::size_t sweeps = 0;
  for (std::size_t l = 0; l < n; ++l) {
    while (true) {
      std::size_t m = l;
      for (; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kUlp * dd) break;
      }
      if (m == l) break;
      if (++sweeps > budget) throw NumericFailure("tridiagonal QL did not converge", n);
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
}

}  // namespace

Spectrum eigenvalues(const SquareMatrix& m) {
  if (!m.all_finite()) throw ContractViolation("eigenvalues: matrix has non-finite entries");
  const std::size_t n = m.dim();
  SquareMatrix h = m;
  balance(h);
  reduce_to_hessenberg(h);
  Spectrum spec;
  spec.values = hessenberg_qr(h);
  spec.source_dim = n;

  cplx sum = 0.0;
  for (const auto& v : spec.values) sum += v;
  spec.trace_residual = std::abs(sum - m.trace());
  const double tol = 1e-8 * static_cast<double>(n) * std::max(m.max_abs(), 1e-300);
  if (!(spec.trace_residual <= tol)) {
    throw NumericFailure("eigenvalue sum disagrees with trace", n);
  }
  return spec;
}

std::vector<double> hermitian_eigenvalues(const SquareMatrix& m) {
  if (!m.all_finite()) throw ContractViolation("hermitian_eigenvalues: non-finite entries");
  const double tol = 1e-12 * std::max(1.0, m.max_abs());
  if (m.hermitian_defect() > tol) {
    throw ContractViolation("hermitian_eigenvalues: matrix is not Hermitian");
  }
  std::vector<double> d;
  std::vector<double> e;
  tridiagonalize(m, d, e);
  tridiagonal_ql(d, e);
  std::sort(d.begin(), d.end());
  return d;
}

SpectrumCheck check_spectrum(const SquareMatrix& m, const Spectrum& spectrum) {
  SpectrumCheck check;
  cplx sum = 0.0;
  double log_abs = 0.0;
  for (const auto& v : spectrum.values) {
    sum += v;
    log_abs += std::log(std::abs(v));
  }
  check.trace_residual = std::abs(sum - m.trace());
  check.log_det_residual = std::abs(log_abs - log_abs_determinant(m));
  return check;
}

}  // namespace critlab

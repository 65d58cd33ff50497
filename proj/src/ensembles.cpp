#include "critlab/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "critlab/errors.hpp"

namespace critlab {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr std::uint64_t kGinibreTag = 0x67696e69627265ULL;

void require_positive(std::size_t n) {
  if (n == 0) throw InvalidDimension("dimension must be positive");
}

cplx complex_normal(RngStream& rng) {
  const double re = rng.normal();
  const double im = rng.normal();
  return {re * kInvSqrt2, im * kInvSqrt2};
}

// Q from a Householder QR of `a`, with Q <- Q diag(r_kk / |r_kk|).
SquareMatrix phase_corrected_q(SquareMatrix a) {
  const std::size_t n = a.dim();
  std::vector<std::vector<cplx>> reflectors;
  std::vector<cplx> r_diag(n);
  reflectors.reserve(n);

  for (std::size_t k = 0; k < n; ++k) {
    double norm2 = 0.0;
    for (std::size_t i = k; i < n; ++i) norm2 += std::norm(a(i, k));
    const double norm = std::sqrt(norm2);
    const cplx x0 = a(k, k);
    const cplx phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : cplx(1.0);
    const cplx alpha = -phase * norm;
    std::vector<cplx> u(n - k);
    for (std::size_t i = k; i < n; ++i) u[i - k] = a(i, k);
    u[0] -= alpha;
    double unorm2 = 0.0;
    for (const auto& x : u) unorm2 += std::norm(x);
    r_diag[k] = alpha;
    if (unorm2 == 0.0) {
      reflectors.emplace_back();
      continue;
    }
    const double beta = 2.0 / unorm2;
    // a <- (I - beta u u^*) a on rows k.., columns k..
    std::vector<cplx> w(n - k, 0.0);
    for (std::size_t i = k; i < n; ++i) {
      const cplx ui = std::conj(u[i - k]);
      const cplx* ai = a.row(i);
      for (std::size_t j = k; j < n; ++j) w[j - k] += ui * ai[j];
    }
    for (std::size_t i = k; i < n; ++i) {
      const cplx f = beta * u[i - k];
      cplx* ai = a.row(i);
      for (std::size_t j = k; j < n; ++j) ai[j] -= f * w[j - k];
    }
    reflectors.push_back(std::move(u));
  }

  // Q = P_0 P_1 ... P_{n-1}, accumulated backwards onto the identity.
  SquareMatrix q = SquareMatrix::identity(n);
  for (std::size_t kk = n; kk-- > 0;) {
    const auto& u = reflectors[kk];
    if (u.empty()) continue;
    double unorm2 = 0.0;
    for (const auto& x : u) unorm2 += std::norm(x);
    const double beta = 2.0 / unorm2;
    std::vector<cplx> w(n - kk, 0.0);
    for (std::size_t i = kk; i < n; ++i) {
      const cplx ui = std::conj(u[i - kk]);
      const cplx* qi = q.row(i);
      for (std::size_t j = kk; j < n; ++j) w[j - kk] += ui * qi[j];
    }
    for (std::size_t i = kk; i < n; ++i) {
      const cplx f = beta * u[i - kk];
      cplx* qi = q.row(i);
      for (std::size_t j = kk; j < n; ++j) qi[j] -= f * w[j - kk];
    }
  }

  for (std::size_t j = 0; j < n; ++j) {
    const double mag = std::abs(r_diag[j]);
    const cplx phase = mag > 0.0 ? r_diag[j] / mag : cplx(1.0);
    for (std::size_t i = 0; i < n; ++i) q(i, j) *= phase;
  }
  return q;
}

// Antiunitary map sending column k of a quaternionic matrix to column m + k.
void quaternion_partner(const std::vector<cplx>& v, std::vector<cplx>& out) {
  const std::size_t m = v.size() / 2;
  out.resize(v.size());
  for (std::size_t i = 0; i < m; ++i) {
    out[i] = -std::conj(v[m + i]);
    out[m + i] = std::conj(v[i]);
  }
}

void project_out(std::vector<cplx>& v, const std::vector<cplx>& q) {
  cplx dot = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) dot += std::conj(q[i]) * v[i];
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= dot * q[i];
}

SquareMatrix haar_symplectic(std::size_t n, RngStream& rng) {
  const std::size_t m = n / 2;
  // Columns of the quaternionic Gaussian: (A_k; -conj(B_k)).
  std::vector<std::vector<cplx>> cols(m, std::vector<cplx>(n));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      const cplx a = complex_normal(rng);
      const cplx b = complex_normal(rng);
      cols[k][i] = a;
      cols[k][m + i] = -std::conj(b);
    }
  }

  std::vector<std::vector<cplx>> basis;
  std::vector<std::vector<cplx>> partners;
  basis.reserve(m);
  partners.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<cplx> v = cols[k];
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < k; ++j) {
        project_out(v, basis[j]);
        project_out(v, partners[j]);
      }
    }
    double norm2 = 0.0;
    for (const auto& x : v) norm2 += std::norm(x);
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& x : v) x *= inv;
    std::vector<cplx> partner;
    quaternion_partner(v, partner);
    basis.push_back(std::move(v));
    partners.push_back(std::move(partner));
  }

  SquareMatrix q(n);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      q(i, k) = basis[k][i];
      q(i, m + k) = partners[k][i];
    }
  }
  return q;
}

double identity_residual(const SquareMatrix& product) {
  double r = 0.0;
  const std::size_t n = product.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r = std::max(r, std::abs(product(i, j) - (i == j ? cplx(1.0) : cplx(0.0))));
  return r;
}

double unitary_residual(const SquareMatrix& m) {
  const SquareMatrix adj = m.adjoint();
  return std::max(identity_residual(m * adj), identity_residual(adj * m));
}

double orthogonal_residual(const SquareMatrix& m) {
  const SquareMatrix t = m.transpose();
  double imag = 0.0;
  for (const auto& x : m.entries()) imag = std::max(imag, std::abs(x.imag()));
  return std::max({identity_residual(m * t), identity_residual(t * m), imag});
}

}  // namespace

std::string_view to_string(GroupKind kind) noexcept {
  switch (kind) {
    case GroupKind::Orthogonal: return "orthogonal";
    case GroupKind::SpecialOrthogonal: return "special_orthogonal";
    case GroupKind::Unitary: return "unitary";
    case GroupKind::Symplectic: return "symplectic";
  }
  return "unknown";
}

std::optional<GroupKind> parse_group_kind(std::string_view text) noexcept {
  if (text == "orthogonal" || text == "O") return GroupKind::Orthogonal;
  if (text == "special_orthogonal" || text == "SO") return GroupKind::SpecialOrthogonal;
  if (text == "unitary" || text == "U") return GroupKind::Unitary;
  if (text == "symplectic" || text == "Sp") return GroupKind::Symplectic;
  return std::nullopt;
}

SquareMatrix sample_real_gaussian_matrix(std::size_t n, RngStream& rng) {
  require_positive(n);
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.normal();
  return m;
}

SquareMatrix sample_complex_gaussian_matrix(std::size_t n, RngStream& rng) {
  require_positive(n);
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = complex_normal(rng);
  return m;
}

SquareMatrix haar_sample(GroupKind kind, std::size_t n, RngStream& rng) {
  require_positive(n);
  switch (kind) {
    case GroupKind::Unitary:
      return phase_corrected_q(sample_complex_gaussian_matrix(n, rng));
    case GroupKind::Orthogonal:
      return phase_corrected_q(sample_real_gaussian_matrix(n, rng));
    case GroupKind::SpecialOrthogonal: {
      SquareMatrix q = phase_corrected_q(sample_real_gaussian_matrix(n, rng));
      if (determinant(q).real() < 0.0) {
        for (std::size_t j = 0; j < n; ++j) q(0, j) = -q(0, j);
      }
      return q;
    }
    case GroupKind::Symplectic:
      if (n % 2 != 0) throw InvalidDimension("symplectic dimension must be even");
      return haar_symplectic(n, rng);
  }
  throw ContractViolation("unknown group kind");
}

SquareMatrix symplectic_form(std::size_t n) {
  if (n == 0 || n % 2 != 0) throw InvalidDimension("symplectic dimension must be even");
  const std::size_t m = n / 2;
  SquareMatrix j(n);
  for (std::size_t i = 0; i < m; ++i) {
    j(i, m + i) = 1.0;
    j(m + i, i) = -1.0;
  }
  return j;
}

double membership_residual(const SquareMatrix& m, GroupKind kind) {
  switch (kind) {
    case GroupKind::Orthogonal:
      return orthogonal_residual(m);
    case GroupKind::SpecialOrthogonal:
      return std::max(orthogonal_residual(m), std::abs(determinant(m) - cplx(1.0)));
    case GroupKind::Unitary:
      return unitary_residual(m);
    case GroupKind::Symplectic: {
      const SquareMatrix j = symplectic_form(m.dim());
      return std::max(unitary_residual(m), max_abs_diff(m.transpose() * j * m, j));
    }
  }
  throw ContractViolation("unknown group kind");
}

double symplectic_literal_residual(const SquareMatrix& m) {
  const SquareMatrix j = symplectic_form(m.dim());
  const SquareMatrix adj = m.adjoint();
  return std::max(max_abs_diff(m * j * adj, j), max_abs_diff(adj * j * m, j));
}

SquareMatrix sample_wigner(std::size_t n, RngStream& rng) {
  require_positive(n);
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = rng.normal();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx z = complex_normal(rng);
      m(i, j) = z;
      m(j, i) = std::conj(z);
    }
  }
  return m;
}

SquareMatrix sample_ginibre_real(std::size_t n, RngStream& rng) {
  require_positive(n);
  RngStream own(rng.next_u64(), kGinibreTag);
  return sample_real_gaussian_matrix(n, own);
}

}  // namespace critlab

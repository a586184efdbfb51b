#include "dwl/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dwl {

namespace {

constexpr cplx kI{0.0, 1.0};

// Every Clifford basis element in the Dirac representation has exactly one
// non-zero entry per row, so traces against it cost four multiplications.
struct Monomial {
  std::array<int, 4> col{};
  std::array<cplx, 4> val{};

  static Monomial from(const ComplexMatrix4& g) {
    Monomial out;
    for (int i = 0; i < 4; ++i) {
      int best = 0;
      for (int j = 1; j < 4; ++j) {
        if (std::abs(g(i, j)) > std::abs(g(i, best))) best = j;
      }
      out.col[i] = best;
      out.val[i] = g(i, best);
    }
    return out;
  }

  // Tr[G M]
  cplx trace_with(const ComplexMatrix4& m) const {
    cplx t{};
    for (int i = 0; i < 4; ++i) t += val[i] * m(col[i], i);
    return t;
  }
};

struct ProjectionTable {
  Monomial gamma5;
  std::array<Monomial, 4> gamma_upper;
  std::array<Monomial, 4> gamma5_gamma_upper;
  std::array<std::array<Monomial, 4>, 4> sigma_upper;

  ProjectionTable() {
    const ComplexMatrix4 g5 = dwl::gamma5();
    gamma5 = Monomial::from(g5);
    for (int mu = 0; mu < 4; ++mu) {
      const ComplexMatrix4 gu = dwl::gamma(mu) * cplx{metric(mu)};
      gamma_upper[mu] = Monomial::from(gu);
      gamma5_gamma_upper[mu] = Monomial::from(g5 * gu);
      for (int nu = 0; nu < 4; ++nu) {
        sigma_upper[mu][nu] =
            Monomial::from(dwl::sigma(mu, nu) * cplx{metric(mu) * metric(nu)});
      }
    }
  }
};

const ProjectionTable& projections() {
  static const ProjectionTable table;
  return table;
}

}  // namespace

Matrix2 Matrix2::identity() { return Matrix2{{1.0, 0.0, 0.0, 1.0}}; }
Matrix2 Matrix2::pauli_x() { return Matrix2{{0.0, 1.0, 1.0, 0.0}}; }
Matrix2 Matrix2::pauli_y() { return Matrix2{{0.0, -kI, kI, 0.0}}; }
Matrix2 Matrix2::pauli_z() { return Matrix2{{1.0, 0.0, 0.0, -1.0}}; }

ComplexMatrix4 ComplexMatrix4::identity() { return diagonal(1.0, 1.0, 1.0, 1.0); }

ComplexMatrix4 ComplexMatrix4::diagonal(cplx d0, cplx d1, cplx d2, cplx d3) {
  ComplexMatrix4 m;
  m(0, 0) = d0;
  m(1, 1) = d1;
  m(2, 2) = d2;
  m(3, 3) = d3;
  return m;
}

ComplexMatrix4& ComplexMatrix4::operator+=(const ComplexMatrix4& o) {
  for (int i = 0; i < 16; ++i) m_[i] += o.m_[i];
  return *this;
}

ComplexMatrix4& ComplexMatrix4::operator-=(const ComplexMatrix4& o) {
  for (int i = 0; i < 16; ++i) m_[i] -= o.m_[i];
  return *this;
}

ComplexMatrix4& ComplexMatrix4::operator*=(cplx s) {
  for (auto& v : m_) v *= s;
  return *this;
}

ComplexMatrix4 operator*(const ComplexMatrix4& a, const ComplexMatrix4& b) {
  ComplexMatrix4 c;
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (int j = 0; j < 4; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

cplx ComplexMatrix4::trace() const { return m_[0] + m_[5] + m_[10] + m_[15]; }

ComplexMatrix4 ComplexMatrix4::adjoint() const {
  ComplexMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

ComplexMatrix4 ComplexMatrix4::transpose() const {
  ComplexMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = (*this)(j, i);
  return r;
}

ComplexMatrix4 ComplexMatrix4::conj() const {
  ComplexMatrix4 r = *this;
  for (auto& v : r.m_) v = std::conj(v);
  return r;
}

double ComplexMatrix4::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : m_) s += std::norm(v);
  return std::sqrt(s);
}

double ComplexMatrix4::max_abs() const {
  double s = 0.0;
  for (const auto& v : m_) s = std::max(s, std::abs(v));
  return s;
}

cplx trace_of_product(const ComplexMatrix4& a, const ComplexMatrix4& b) {
  cplx t{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) t += a(i, k) * b(k, i);
  return t;
}

ComplexMatrix4 pauli_kron(const Matrix2& p, const Matrix2& s) {
  ComplexMatrix4 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = p(i, j) * s(k, l);
  return m;
}

ComplexMatrix4 gamma(int mu) {
  if (mu < 0 || mu > 3) {
    throw std::invalid_argument("gamma: index " + std::to_string(mu) + " outside 0..3");
  }
  const ComplexMatrix4 beta = pauli_kron(Matrix2::pauli_z(), Matrix2::identity());
  if (mu == 0) return beta;
  const Matrix2 spin[3] = {Matrix2::pauli_x(), Matrix2::pauli_y(), Matrix2::pauli_z()};
  // gamma_j = beta alpha_j, alpha_j = sigma_x (x) sigma_j
  return beta * pauli_kron(Matrix2::pauli_x(), spin[mu - 1]);
}

ComplexMatrix4 gamma5() {
  return kI * (gamma(0) * gamma(1) * gamma(2) * gamma(3));
}

ComplexMatrix4 sigma(int mu, int nu) {
  const ComplexMatrix4 gm = gamma(mu);
  const ComplexMatrix4 gn = gamma(nu);
  return (gm * gn - gn * gm) * (0.5 * kI);
}

double CliffordComponents::max_imag() const {
  double m = std::max(std::abs(S.imag()), std::abs(Pi.imag()));
  for (int mu = 0; mu < 4; ++mu) {
    m = std::max({m, std::abs(V[mu].imag()), std::abs(A[mu].imag())});
    for (int nu = mu + 1; nu < 4; ++nu) m = std::max(m, std::abs(T[mu][nu].imag()));
  }
  return m;
}

double CliffordComponents::euclidean_norm2() const {
  double s = std::norm(S) + std::norm(Pi);
  for (int mu = 0; mu < 4; ++mu) {
    s += std::norm(V[mu]) + std::norm(A[mu]);
    for (int nu = 0; nu < 4; ++nu) s += 0.5 * std::norm(T[mu][nu]);
  }
  return s;
}

bool CliffordComponents::tensor_is_antisymmetric(double tol) const {
  double scale = 0.0;
  for (const auto& row : T)
    for (const auto& v : row) scale = std::max(scale, std::abs(v));
  const double bound = tol * std::max(scale, 1.0);
  for (int mu = 0; mu < 4; ++mu) {
    if (std::abs(T[mu][mu]) > bound) return false;
    for (int nu = mu + 1; nu < 4; ++nu) {
      if (std::abs(T[mu][nu] + T[nu][mu]) > bound) return false;
    }
  }
  return true;
}

CliffordComponents decompose(const ComplexMatrix4& m) {
  const ProjectionTable& p = projections();
  CliffordComponents c;
  c.S = 0.25 * m.trace();
  c.Pi = -0.25 * kI * p.gamma5.trace_with(m);
  for (int mu = 0; mu < 4; ++mu) {
    c.V[mu] = 0.25 * p.gamma_upper[mu].trace_with(m);
    c.A[mu] = 0.25 * p.gamma5_gamma_upper[mu].trace_with(m);
  }
  for (int mu = 0; mu < 4; ++mu) {
    c.T[mu][mu] = 0.0;
    for (int nu = mu + 1; nu < 4; ++nu) {
      c.T[mu][nu] = 0.25 * p.sigma_upper[mu][nu].trace_with(m);
      c.T[nu][mu] = -c.T[mu][nu];
    }
  }
  return c;
}

ComplexMatrix4 reconstruct(const CliffordComponents& c) {
  if (!c.tensor_is_antisymmetric(1e-12)) {
    throw std::invalid_argument("reconstruct: tensor component T is not antisymmetric");
  }
  const ComplexMatrix4 g5 = gamma5();
  ComplexMatrix4 m = ComplexMatrix4::identity() * c.S;
  m += g5 * (kI * c.Pi);
  for (int mu = 0; mu < 4; ++mu) {
    const ComplexMatrix4 g = gamma(mu);
    m += g * c.V[mu];
    m += (g * g5) * c.A[mu];
  }
  // (1/2) sum over all mu,nu == sum over mu<nu for antisymmetric T
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) m += sigma(mu, nu) * c.T[mu][nu];
  return m;
}

}  // namespace dwl

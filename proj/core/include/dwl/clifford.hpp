#pragma once

#include <array>
#include <complex>

namespace dwl {

using cplx = std::complex<double>;

/// Dense 2x2 complex matrix, row-major. Only used to build Kronecker
/// products on the parity (first) and spin (second) doublets.
struct Matrix2 {
  std::array<cplx, 4> a{};

  constexpr cplx& operator()(int i, int j) { return a[2 * i + j]; }
  constexpr const cplx& operator()(int i, int j) const { return a[2 * i + j]; }

  static Matrix2 identity();
  static Matrix2 pauli_x();
  static Matrix2 pauli_y();
  static Matrix2 pauli_z();
};

/// Dense 4x4 complex matrix, row-major, value semantics.
class ComplexMatrix4 {
 public:
  constexpr ComplexMatrix4() = default;

  static ComplexMatrix4 zero() { return {}; }
  static ComplexMatrix4 identity();
  static ComplexMatrix4 diagonal(cplx d0, cplx d1, cplx d2, cplx d3);

  constexpr cplx& operator()(int i, int j) { return m_[4 * i + j]; }
  constexpr const cplx& operator()(int i, int j) const { return m_[4 * i + j]; }

  const std::array<cplx, 16>& data() const { return m_; }

  ComplexMatrix4& operator+=(const ComplexMatrix4& o);
  ComplexMatrix4& operator-=(const ComplexMatrix4& o);
  ComplexMatrix4& operator*=(cplx s);

  friend ComplexMatrix4 operator+(ComplexMatrix4 a, const ComplexMatrix4& b) { return a += b; }
  friend ComplexMatrix4 operator-(ComplexMatrix4 a, const ComplexMatrix4& b) { return a -= b; }
  friend ComplexMatrix4 operator*(ComplexMatrix4 a, cplx s) { return a *= s; }
  friend ComplexMatrix4 operator*(cplx s, ComplexMatrix4 a) { return a *= s; }
  friend ComplexMatrix4 operator*(const ComplexMatrix4& a, const ComplexMatrix4& b);

  cplx trace() const;
  ComplexMatrix4 adjoint() const;
  ComplexMatrix4 transpose() const;
  ComplexMatrix4 conj() const;
  double frobenius_norm() const;
  // Largest |entry|.
  double max_abs() const;

 private:
  std::array<cplx, 16> m_{};
};

/// Tr[a b] without forming the product.
cplx trace_of_product(const ComplexMatrix4& a, const ComplexMatrix4& b);

/// Minkowski metric diagonal, signature (+,-,-,-).
constexpr double metric(int mu) { return mu == 0 ? 1.0 : -1.0; }

/// Dirac-representation gamma_mu (lower index). Throws std::invalid_argument
/// for mu outside 0..3.
ComplexMatrix4 gamma(int mu);
/// gamma_5 = i gamma_0 gamma_1 gamma_2 gamma_3.
ComplexMatrix4 gamma5();
/// sigma_{mu nu} = (i/2)[gamma_mu, gamma_nu].
ComplexMatrix4 sigma(int mu, int nu);

/// Kronecker product p (x) s; p acts on the parity doublet, s on spin.
ComplexMatrix4 pauli_kron(const Matrix2& p, const Matrix2& s);

/// Coefficients of the expansion
///   M = S + i g5 Pi + g_mu V^mu + g_mu g5 A^mu + (1/2) sigma_{mu nu} T^{mu nu}.
/// All indices stored raised. Components are complex in general; they are
/// real whenever M is pseudo-Hermitian (g0 M g0 = M^dagger).
struct CliffordComponents {
  cplx S{};
  cplx Pi{};
  std::array<cplx, 4> V{};
  std::array<cplx, 4> A{};
  std::array<std::array<cplx, 4>, 4> T{};

  // Largest |imag| over all 16 independent components.
  double max_imag() const;
  // Sum of |c|^2 with Euclidean index contraction, tensor counted once per
  // unordered pair: |S|^2 + |Pi|^2 + sum|V|^2 + sum|A|^2 + (1/2) sum|T|^2.
  double euclidean_norm2() const;
  bool tensor_is_antisymmetric(double tol = 1e-14) const;
};

CliffordComponents decompose(const ComplexMatrix4& m);
/// Inverse of decompose. Throws std::invalid_argument if T is not
/// antisymmetric (tolerance 1e-12 relative to the largest entry).
ComplexMatrix4 reconstruct(const CliffordComponents& c);

}  // namespace dwl

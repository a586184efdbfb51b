#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dwl/errors.hpp"
#include "dwl/quantifiers.hpp"

namespace dwl::quant {

namespace {

using Mat4 = Eigen::Matrix<cplx, 4, 4>;

Mat4 to_eigen(const ComplexMatrix4& m) {
  Mat4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = m(i, j);
  return out;
}

// sy x sy, real and involutive
Mat4 flip_operator() {
  Mat4 y = Mat4::Zero();
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

Mat4 sqrt_psd(const Mat4& m) {
  Eigen::SelfAdjointEigenSolver<Mat4> es(m);
  Eigen::Vector4d ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

double expectation(const ComplexMatrix4& rho, const ComplexMatrix4& op) {
  return trace_of_product(op, rho).real();
}

}  // namespace

ComplexMatrix4 spin_flip(const ComplexMatrix4& m) {
  const ComplexMatrix4 y = pauli_kron(Matrix2::pauli_y(), Matrix2::pauli_y());
  return y * m.conj() * y;
}

TwoQubitDensity::TwoQubitDensity(const ComplexMatrix4& m) : m_(m) {
  if (std::abs(m.trace() - 1.0) > 1e-10) throw std::invalid_argument("TwoQubitDensity: trace must be 1");
  if ((m - m.adjoint()).max_abs() > 1e-12) throw std::invalid_argument("TwoQubitDensity: not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat4> es(to_eigen(m), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw std::invalid_argument("TwoQubitDensity: not positive semidefinite");
}

TwoQubitDensity TwoQubitDensity::pure(const std::array<cplx, 4>& v) {
  double norm2 = 0.0;
  for (const auto& c : v) norm2 += std::norm(c);
  if (!(norm2 > 0.0)) throw std::invalid_argument("TwoQubitDensity::pure: zero vector");
  ComplexMatrix4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = v[i] * std::conj(v[j]) / norm2;
  // exact Hermiticity before validation
  return TwoQubitDensity((m + m.adjoint()) * cplx(0.5));
}

double TwoQubitDensity::purity() const { return trace_of_product(m_, m_).real(); }

double concurrence_general(const TwoQubitDensity& rho) {
  const Mat4 root = sqrt_psd(to_eigen(rho.matrix()));
  const Mat4 y = flip_operator();
  const Mat4 r = root * y * root.conjugate() * y;
  Eigen::JacobiSVD<Mat4> svd(r);
  auto w = svd.singularValues();  // descending
  return std::max(0.0, w(0) - w(1) - w(2) - w(3));
}

BlochDecomposition bloch_decomposition(const TwoQubitDensity& rho) {
  const std::array<Matrix2, 3> s{Matrix2::pauli_x(), Matrix2::pauli_y(), Matrix2::pauli_z()};
  const Matrix2 id = Matrix2::identity();
  BlochDecomposition out;
  for (int i = 0; i < 3; ++i) {
    out.a[i] = expectation(rho.matrix(), pauli_kron(s[i], id));
    out.b[i] = expectation(rho.matrix(), pauli_kron(id, s[i]));
    for (int j = 0; j < 3; ++j) out.t[i][j] = expectation(rho.matrix(), pauli_kron(s[i], s[j]));
  }
  return out;
}

double concurrence_pure_bloch(const TwoQubitDensity& rho) {
  if (std::abs(rho.purity() - 1.0) > 1e-8)
    throw PreconditionError("concurrence_pure_bloch: state is not pure");
  const auto bd = bloch_decomposition(rho);
  const double a2 = bd.a[0] * bd.a[0] + bd.a[1] * bd.a[1] + bd.a[2] * bd.a[2];
  return std::sqrt(std::max(0.0, 1.0 - a2));
}

double concurrence_sq_field(const LandauState& st, PhasePoint p) {
  const auto k = wigner::kernels(st.n(), p, st.params().eB);
  const double eb = st.eta() * st.B();
  return -2.0 * eb * eb * k.L_upper * k.L_lower;
}

double concurrence_sq_trace(const LandauState& st, PhasePoint p) {
  static const ComplexMatrix4 g20 = gamma(2) * gamma(0);
  const ComplexMatrix4 w = wigner::omega_matrix(st, p);
  const ComplexMatrix4 left = w * g20;
  return -trace_of_product(left, left).real();
}

double concurrence_sq_corrected(const LandauState& st, PhasePoint p) {
  const auto k = wigner::kernels(st.n(), p, st.params().eB);
  const double eb = st.eta() * st.B();
  return 2.0 * eb * eb * (k.L_upper * k.L_lower + k.M * k.M - k.N * k.N);
}

ConcurrenceIntegrals concurrence_sq_integral(const LandauState& st, const QuadratureGrid& grid) {
  struct P2 {
    double a = 0.0, b = 0.0;
    P2& operator+=(const P2& o) {
      a += o.a;
      b += o.b;
      return *this;
    }
    P2& operator*=(double w) {
      a *= w;
      b *= w;
      return *this;
    }
  };
  const P2 sum = numerics::integrate_grid<P2>(
      grid, [&](PhasePoint p) { return P2{concurrence_sq_field(st, p), concurrence_sq_trace(st, p)}; });
  const double scale = 2.0 * std::numbers::pi / st.params().eB;
  return {scale * sum.a, scale * sum.b};
}

double binary_entropy(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::invalid_argument("binary_entropy: argument outside [0,1]");
  auto term = [](double v) { return v > 0.0 ? -v * std::log2(v) : 0.0; };
  return term(lambda) + term(1.0 - lambda);
}

double eof_from_concurrence(double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("eof_from_concurrence: C outside [0,1]");
  return binary_entropy(0.5 * (1.0 - std::sqrt(1.0 - c * c)));
}

}  // namespace dwl::quant

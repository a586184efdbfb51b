#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dwl/errors.hpp"
#include "dwl/quantifiers.hpp"
#include "oracles.hpp"

using namespace dwl;
using namespace dwl::quant;
using landau::Parity;
using landau::PhysParams;
using landau::Spin;

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Matrix4cd to_eigen(const ComplexMatrix4& m) {
  Eigen::Matrix4cd e;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) e(i, j) = m(i, j);
  return e;
}

ComplexMatrix4 random_density(std::mt19937_64& rng, int rank) {
  std::normal_distribution<double> g;
  ComplexMatrix4 rho;
  for (int k = 0; k < rank; ++k) {
    std::array<cplx, 4> v;
    for (auto& c : v) c = {g(rng), g(rng)};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) rho(i, j) += v[i] * std::conj(v[j]);
  }
  return rho * (1.0 / rho.trace().real());
}

std::array<cplx, 4> random_vector(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::array<cplx, 4> v;
  for (auto& c : v) c = {g(rng), g(rng)};
  return v;
}

Matrix2 random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  cplx a(g(rng), g(rng)), b(g(rng), g(rng));
  const double nrm = std::sqrt(std::norm(a) + std::norm(b));
  a /= nrm;
  b /= nrm;
  Matrix2 u;
  u(0, 0) = a;
  u(0, 1) = -std::conj(b);
  u(1, 0) = b;
  u(1, 1) = std::conj(a);
  return u;
}

TwoQubitDensity bell() {
  const double h = 1.0 / std::sqrt(2.0);
  return TwoQubitDensity::pure({h, 0, 0, h});
}

LandauState state(int n, Parity r, Spin spin, double eps = 1.0, double kappa = 1.0) {
  return LandauState(n, r, spin, PhysParams::from_dimensionless(eps, kappa));
}

}  // namespace

TEST_SUITE("concurrence") {

TEST_CASE("spin flip") {
  const auto mixed = ComplexMatrix4::identity() * 0.25;
  CHECK((spin_flip(mixed) - mixed).max_abs() < 1e-16);
  CHECK((spin_flip(bell().matrix()) - bell().matrix()).max_abs() < 1e-15);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    const auto rho = random_density(rng, 2);
    CHECK((spin_flip(spin_flip(rho)) - rho).max_abs() < 1e-15);
  }
}

TEST_CASE("density validation") {
  auto bad = ComplexMatrix4::identity() * 0.3;
  CHECK_THROWS_AS(TwoQubitDensity{bad}, std::invalid_argument);
  auto nonherm = ComplexMatrix4::identity() * 0.25;
  nonherm(0, 1) = 0.1;
  CHECK_THROWS_AS(TwoQubitDensity{nonherm}, std::invalid_argument);
  const auto negative = ComplexMatrix4::diagonal(0.6, 0.6, -0.1, -0.1);
  CHECK_THROWS_AS(TwoQubitDensity{negative}, std::invalid_argument);
  CHECK(TwoQubitDensity::pure({1, 0, 0, 0}).purity() == doctest::Approx(1.0));
}

TEST_CASE("standard states") {
  CHECK(std::abs(concurrence_general(bell()) - 1.0) < 1e-10);
  CHECK(std::abs(concurrence_general(TwoQubitDensity::pure({1, 0, 0, 0}))) < 1e-10);
  const auto werner = TwoQubitDensity(bell().matrix() * 0.8 + ComplexMatrix4::identity() * (0.2 / 4));
  CHECK(std::abs(concurrence_general(werner) - 0.7) < 1e-10);
  const auto separable = TwoQubitDensity(bell().matrix() * 0.3 + ComplexMatrix4::identity() * (0.7 / 4));
  CHECK(concurrence_general(separable) == 0.0);
  CHECK(concurrence_general(TwoQubitDensity(ComplexMatrix4::identity() * 0.25)) == 0.0);
}

TEST_CASE("general route against an eigenvalue oracle") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto rho = random_density(rng, 1 + i % 4);
    // the oracle takes square roots of near-zero eigenvalues of rho rho~, so
    // rank-deficient inputs carry ~sqrt(eps) noise on its side
    CHECK(std::abs(concurrence_general(TwoQubitDensity(rho)) - oracle::concurrence(to_eigen(rho))) < 1e-7);
  }
}

TEST_CASE("Bloch route") {
  const auto b = bloch_decomposition(TwoQubitDensity::pure({1, 0, 0, 0}));
  CHECK(b.a[2] == doctest::Approx(1.0));
  CHECK(b.b[2] == doctest::Approx(1.0));
  CHECK(b.t[2][2] == doctest::Approx(1.0));
  CHECK(std::abs(concurrence_pure_bloch(bell()) - 1.0) < 1e-12);
  CHECK(std::abs(concurrence_pure_bloch(TwoQubitDensity::pure({1, 0, 0, 0}))) < 1e-12);

  std::mt19937_64 rng(6);
  for (int i = 0; i < 1000; ++i) {
    const auto rho = TwoQubitDensity::pure(random_vector(rng));
    CHECK(std::abs(concurrence_pure_bloch(rho) - concurrence_general(rho)) < 1e-8);
  }
  CHECK_THROWS_AS(concurrence_pure_bloch(TwoQubitDensity(ComplexMatrix4::identity() * 0.25)), PreconditionError);
}

TEST_CASE("local unitary invariance") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto u = pauli_kron(random_su2(rng), random_su2(rng));
    const auto rotated = TwoQubitDensity(u * bell().matrix() * u.adjoint());
    CHECK(std::abs(concurrence_pure_bloch(rotated) - 1.0) < 1e-10);
    CHECK(std::abs(concurrence_general(rotated) - 1.0) < 1e-10);
    const auto rho = random_density(rng, 2);
    CHECK(std::abs(concurrence_general(TwoQubitDensity(u * rho * u.adjoint())) -
                   concurrence_general(TwoQubitDensity(rho))) < 1e-9);
  }
}

TEST_CASE("entanglement of formation") {
  CHECK(eof_from_concurrence(0.0) == 0.0);
  CHECK(eof_from_concurrence(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  const long double lam = (1.0L - std::sqrt(0.75L)) / 2;
  CHECK(std::abs(eof_from_concurrence(0.5) - static_cast<double>(oracle::binary_entropy(lam))) < 1e-14);
  CHECK(eof_from_concurrence(0.5) == doctest::Approx(0.35457890).epsilon(1e-7));
  double prev = 0.0;
  for (int i = 1; i <= 100; ++i) {
    const double e = eof_from_concurrence(i / 100.0);
    CHECK(e > prev);
    prev = e;
  }
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(0.5) == 1.0);
  CHECK_THROWS_AS(eof_from_concurrence(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(eof_from_concurrence(1.1), std::invalid_argument);
  CHECK_THROWS_AS(binary_entropy(2.0), std::invalid_argument);
}

TEST_CASE("concurrence field of Landau states") {
  const auto st = state(1, Parity::Positive, Spin::Up);
  CHECK(concurrence_sq_field(st, {0, 0}) == doctest::Approx(1.0 / (4 * kPi * kPi)).epsilon(1e-14));

  // the trace route equals 2 eta^2 B^2 (L L + M^2 - N^2) everywhere
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-4, 4);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto s2 = state(1 + i % 5, i % 2 ? Parity::Positive : Parity::Negative, i % 3 ? Spin::Up : Spin::Down,
                          0.5 + i % 7, (i % 4) * 0.5);
    const PhasePoint p{u(rng), u(rng)};
    worst = std::max(worst, std::abs(concurrence_sq_trace(s2, p) - concurrence_sq_corrected(s2, p)));
  }
  CHECK(worst < 1e-10);

  // and differs from the usual quoted form: at the origin the sign flips
  CHECK(concurrence_sq_trace(st, {0, 0}) == doctest::Approx(-1.0 / (4 * kPi * kPi)).epsilon(1e-12));
  CHECK(concurrence_sq_trace(st, {0, 0}) == doctest::Approx(-concurrence_sq_field(st, {0, 0})));
}

TEST_CASE("concurrence integrates to zero") {
  for (int n = 1; n <= 5; ++n)
    for (auto r : {Parity::Positive, Parity::Negative}) {
      const auto st = state(n, r, Spin::Down, 2.0, 1.0);
      const auto ints = concurrence_sq_integral(st, numerics::default_grid(n));
      CHECK(std::abs(ints.closed) < 1e-8);
      CHECK(std::abs(ints.trace) < 1e-8);
    }
}

}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dwl/landau.hpp"
#include "dwl/numerics.hpp"
#include "oracles.hpp"

using namespace dwl::landau;

namespace {

const Parity kParities[] = {Parity::Positive, Parity::Negative};
const Spin kSpins[] = {Spin::Up, Spin::Down};

PhysParams params(double m, double eB, double kz, double ky = 0.0) {
  PhysParams p;
  p.m = m;
  p.eB = eB;
  p.kz = kz;
  p.ky = ky;
  return p;
}

double overlap(const LandauState& a, const LandauState& b) {
  const double L = std::sqrt(2.0 * (2 * std::max(a.n(), b.n()) + 1)) + 8.0;
  return dwl::numerics::integrate_1d(
             [&](double s) {
               const auto u = spinor_at_s(a, s);
               const auto v = spinor_at_s(b, s);
               double acc = 0.0;
               for (int i = 0; i < 4; ++i) acc += (std::conj(u[i]) * v[i]).real();
               return acc;
             },
             -L, L, 1024) /
         std::sqrt(a.params().eB);
}

}  // namespace

TEST_SUITE("landau") {

TEST_CASE("orbit coordinate") {
  const auto p = params(1.0, 4.0, 0.0, 0.0);
  CHECK(s_coordinate(1.0, Parity::Positive, p) == doctest::Approx(2.0));
  // r = 2 adds ky/eB: sqrt(1) * (0 + 1)
  CHECK(s_coordinate(0.0, Parity::Negative, params(1.0, 1.0, 0.0, 1.0)) == doctest::Approx(1.0));
  CHECK(s_coordinate(0.0, Parity::Positive, params(1.0, 1.0, 0.0, 1.0)) == doctest::Approx(-1.0));
  for (auto r : kParities) {
    const auto q = params(1.0, 2.5, 0.3, 0.8);
    const double sign = r == Parity::Positive ? -1.0 : 1.0;
    CHECK(std::abs(s_coordinate(-sign * q.ky / q.eB, r, q)) < 1e-15);
    CHECK(s_coordinate(1.0, r, q) - s_coordinate(0.0, r, q) == doctest::Approx(std::sqrt(q.eB)).epsilon(1e-14));
    CHECK(x_coordinate(s_coordinate(0.37, r, q), r, q) == doctest::Approx(0.37).epsilon(1e-14));
  }
}

TEST_CASE("Landau energies") {
  CHECK(energy(0, params(1, 1, 0)) == 1.0);
  CHECK(energy(1, params(1, 1, 1)) == doctest::Approx(2.0));
  CHECK(energy(4, params(1, 0.5, 0)) == doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("spin branches are degenerate across neighbouring levels") {
  for (double eB : {0.1, 1.0, 10.0})
    for (int n = 1; n <= 20; ++n) {
      const auto p = params(1.0, eB, 0.7);
      CHECK(std::abs(branch_energy(n - 1, Spin::Up, Parity::Positive, p) -
                     branch_energy(n, Spin::Down, Parity::Positive, p)) < 1e-14 * energy(n, p));
      CHECK(branch_energy(n, Spin::Down, Parity::Positive, p) == doctest::Approx(energy(n, p)).epsilon(1e-15));
    }
}

TEST_CASE("spinor coefficients") {
  const LandauState st(1, Parity::Positive, Spin::Up, PhysParams::from_dimensionless(1.0, 1.0));
  CHECK(st.A() == doctest::Approx(1.0 / 3.0));
  CHECK(st.B() == doctest::Approx(std::sqrt(2.0) / 3.0));
  CHECK(st.eta() == doctest::Approx(0.75));
  CHECK(coefficients(5, params(1, 2, 0)).A == 0.0);
  for (double eps : {0.01, 0.1, 1.0, 10.0, 1e3})
    for (double kappa : {0.0, 1.0, 100.0})
      for (int n = 1; n <= 30; ++n) {
        const auto c = coefficients(n, PhysParams::from_dimensionless(eps, kappa));
        CHECK(std::abs(c.eta * ((1 + c.A * c.A) + c.B * c.B) - 1.0) < 1e-14);
      }
  CHECK_THROWS_AS(LandauState(0, Parity::Positive, Spin::Up, PhysParams{}), std::invalid_argument);
}

TEST_CASE("weak-field limit") {
  const auto c = coefficients(3, params(1.0, 1e-12, 0.4));
  CHECK(c.B < 1e-5);
  CHECK(c.eta * (1 + c.A * c.A) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(params(0.0, 1.0, 0.0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(params(1.0, -1.0, 0.0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(params(1.0, 1.0, NAN).validate(), std::invalid_argument);
  CHECK_THROWS_AS(PhysParams::from_dimensionless(1.0, -0.5), std::invalid_argument);
  const auto p = PhysParams::from_dimensionless(2.0, 9.0);
  CHECK(p.eps() == 2.0);
  CHECK(p.kappa() == doctest::Approx(9.0));
}

TEST_CASE("spinors match the reference component tables") {
  const auto p = params(1.3, 0.7, 0.9);
  for (int n = 1; n <= 6; ++n)
    for (auto r : kParities)
      for (auto spin : kSpins) {
        const LandauState st(n, r, spin, p);
        for (double s : {-3.1, -0.2, 0.0, 1.4, 4.0}) {
          const auto u = spinor_at_s(st, s);
          const auto ref = oracle::spinor(n, static_cast<int>(r), spin == Spin::Up, p.m, p.eB, p.kz, s);
          for (int i = 0; i < 4; ++i) {
            CHECK(std::abs(u[i] - ref[i]) < 1e-13);
          }
        }
        const double x = 0.6;
        const auto ux = spinor(st, x);
        const auto us = spinor_at_s(st, s_coordinate(x, st));
        for (int i = 0; i < 4; ++i) CHECK(ux[i] == us[i]);
      }
}

TEST_CASE("ground level spinor at the orbit centre") {
  const LandauState st(1, Parity::Positive, Spin::Up, PhysParams::from_dimensionless(1.0, 1.0));
  const auto u = spinor_at_s(st, 0.0);
  const double f0 = std::pow(std::numbers::pi, -0.25);
  const double q = std::sqrt(st.eta());
  CHECK(u[0].real() == doctest::Approx(q * f0));
  CHECK(u[1] == 0.0);
  CHECK(u[2].real() == doctest::Approx(st.A() * q * f0));
  CHECK(std::abs(u[3]) < 1e-16);
}

TEST_CASE("spinors are unit normalised") {
  for (double eB : {1.0, 3.0})
    for (int n = 1; n <= 10; ++n)
      for (auto r : kParities)
        for (auto spin : kSpins) {
          const LandauState st(n, r, spin, params(1.0, eB, 0.8));
          CHECK(std::abs(overlap(st, st) - 1.0) < 1e-8);
        }
}

TEST_CASE("opposite spins are orthogonal") {
  for (int n = 1; n <= 5; ++n)
    for (auto r : kParities) {
      const auto p = PhysParams::from_dimensionless(1.0, 1.0);
      CHECK(std::abs(overlap(LandauState(n, r, Spin::Up, p), LandauState(n, r, Spin::Down, p))) < 1e-10);
    }
}

TEST_CASE("layout flags the dominant Laguerre order") {
  const auto p = PhysParams::from_dimensionless(1.0, 1.0);
  CHECK(LandauState(2, Parity::Positive, Spin::Up, p).lower_order_dominant());
  CHECK(LandauState(2, Parity::Negative, Spin::Down, p).lower_order_dominant());
  CHECK_FALSE(LandauState(2, Parity::Positive, Spin::Down, p).lower_order_dominant());
  CHECK_FALSE(LandauState(2, Parity::Negative, Spin::Up, p).lower_order_dominant());
}

}

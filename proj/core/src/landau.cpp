#include "dwl/landau.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dwl/specfun.hpp"

namespace dwl::landau {

namespace {

double parity_sign(Parity r) { return r == Parity::Positive ? -1.0 : 1.0; }

}  // namespace

PhysParams PhysParams::from_dimensionless(double eps, double kappa) {
  if (!(kappa >= 0.0)) throw std::invalid_argument("kappa must be non-negative");
  PhysParams p;
  p.m = 1.0;
  p.eB = eps;
  p.kz = std::sqrt(kappa);
  p.ky = 0.0;
  p.validate();
  return p;
}

void PhysParams::validate() const {
  if (!std::isfinite(m) || !std::isfinite(eB) || !std::isfinite(ky) || !std::isfinite(kz)) {
    throw std::invalid_argument("physical parameters must be finite");
  }
  if (!(m > 0.0)) throw std::invalid_argument("mass must be positive");
  if (!(eB > 0.0)) throw std::invalid_argument("eB must be positive");
}

LandauState::LandauState(int n, Parity r, Spin spin, PhysParams params)
    : n_(n), r_(r), spin_(spin), params_(params) {
  if (n < 1) throw std::invalid_argument("LandauState: n must be >= 1, got " + std::to_string(n));
  if (r != Parity::Positive && r != Parity::Negative) {
    throw std::invalid_argument("LandauState: parity branch must be 1 or 2");
  }
  params_.validate();
  energy_ = landau::energy(n, params_);
  const Coefficients c = coefficients(n, params_);
  A_ = c.A;
  B_ = c.B;
  eta_ = c.eta;
}

bool LandauState::lower_order_dominant() const {
  return (spin_ == Spin::Up) == (r_ == Parity::Positive);
}

double s_coordinate(double x, Parity r, const PhysParams& p) {
  return std::sqrt(p.eB) * (x + parity_sign(r) * p.ky / p.eB);
}

double s_coordinate(double x, const LandauState& st) {
  return s_coordinate(x, st.parity(), st.params());
}

double x_coordinate(double s, Parity r, const PhysParams& p) {
  return s / std::sqrt(p.eB) - parity_sign(r) * p.ky / p.eB;
}

double energy(int n, const PhysParams& p) {
  if (n < 0) throw std::invalid_argument("energy: negative Landau index");
  return std::sqrt(p.m * p.m + p.kz * p.kz + 2.0 * n * p.eB);
}

double branch_energy(int n, Spin spin, Parity r, const PhysParams& p) {
  if (n < 0) throw std::invalid_argument("branch_energy: negative Landau index");
  const double pm = spin == Spin::Up ? 1.0 : -1.0;
  const double zeta = 2.0 * n + 1.0 - pm * parity_sign(r);
  return std::sqrt(p.m * p.m + p.kz * p.kz + zeta * p.eB);
}

Coefficients coefficients(int n, const PhysParams& p) {
  if (n < 1) throw std::invalid_argument("coefficients: n must be >= 1");
  const double e = energy(n, p);
  const double denom = e + p.m;
  return Coefficients{p.kz / denom, std::sqrt(2.0 * n * p.eB) / denom, denom / (2.0 * e)};
}

Coefficients coefficients(const LandauState& st) {
  return Coefficients{st.A(), st.B(), st.eta()};
}

SpinorLayout spinor_layout(const LandauState& st) {
  const int n = st.n();
  const double a = st.A();
  const double b = st.B();
  SpinorLayout l;
  if (st.parity() == Parity::Positive) {
    if (st.spin() == Spin::Up) {
      l.coeff = {1.0, 0.0, a, -b};
      l.order = {n - 1, -1, n - 1, n};
    } else {
      l.coeff = {0.0, 1.0, -b, -a};
      l.order = {-1, n, n - 1, n};
    }
  } else {
    if (st.spin() == Spin::Down) {
      l.coeff = {a, b, 1.0, 0.0};
      l.order = {n - 1, n, n - 1, -1};
    } else {
      l.coeff = {b, -a, 0.0, 1.0};
      l.order = {n - 1, n, -1, n};
    }
  }
  return l;
}

Spinor4 spinor_at_s(const LandauState& st, double s) {
  const SpinorLayout l = spinor_layout(st);
  const int n = st.n();
  const double eB = st.params().eB;
  const double f[2] = {specfun::hermite_fn(n - 1, s, eB), specfun::hermite_fn(n, s, eB)};
  const double root_eta = std::sqrt(st.eta());
  Spinor4 u{};
  for (int i = 0; i < 4; ++i) {
    if (l.order[i] < 0) continue;
    u[i] = root_eta * l.coeff[i] * f[l.order[i] - (n - 1)];
  }
  return u;
}

Spinor4 spinor(const LandauState& st, double x) { return spinor_at_s(st, s_coordinate(x, st)); }

}  // namespace dwl::landau

#pragma once

#include <array>
#include <complex>

namespace dwl::landau {

/// Physical inputs. The mass sets the unit scale; eB and the momenta are
/// in units of m^2 and m respectively.
struct PhysParams {
  double m = 1.0;
  double eB = 1.0;
  double ky = 0.0;
  double kz = 0.0;

  /// m = 1, eB = eps, kz = sqrt(kappa), ky = 0.
  static PhysParams from_dimensionless(double eps, double kappa);

  double eps() const { return eB / (m * m); }
  double kappa() const { return kz * kz / (m * m); }

  /// Throws std::invalid_argument unless m > 0, eB > 0 and all fields finite.
  void validate() const;
};

enum class Spin { Up, Down };

/// Intrinsic-parity branch r: 1 for positive, 2 for negative parity.
enum class Parity { Positive = 1, Negative = 2 };

/// A stationary Landau eigenstate u^{spin}_{n,r}. Construction validates
/// n >= 1 and the physical parameters.
class LandauState {
 public:
  LandauState(int n, Parity r, Spin spin, PhysParams params);

  int n() const { return n_; }
  Parity parity() const { return r_; }
  int r() const { return static_cast<int>(r_); }
  Spin spin() const { return spin_; }
  const PhysParams& params() const { return params_; }

  double energy() const { return energy_; }
  double A() const { return A_; }
  double B() const { return B_; }
  double eta() const { return eta_; }

  /// True for (+, r=1) and (-, r=2): the Laguerre order n-1 carries the
  /// (1 + A^2) weight. False for (-, r=1) and (+, r=2).
  bool lower_order_dominant() const;

 private:
  int n_;
  Parity r_;
  Spin spin_;
  PhysParams params_;
  double energy_;
  double A_;
  double B_;
  double eta_;
};

struct Coefficients {
  double A;
  double B;
  double eta;
};

/// Dimensionless orbit coordinate s_r = sqrt(eB) (x + (-1)^r ky / eB).
double s_coordinate(double x, const LandauState& st);
double s_coordinate(double x, Parity r, const PhysParams& p);
/// Inverse of s_coordinate.
double x_coordinate(double s, Parity r, const PhysParams& p);

/// E_n = sqrt(m^2 + kz^2 + 2 n eB).
double energy(int n, const PhysParams& p);

/// E_{n,spin} of the (r, spin) Hermite branch before the degeneracy is
/// folded:  m^2 + kz^2 + [(2n+1) -/+ (-1)^r] eB  (upper sign for Spin::Up).
double branch_energy(int n, Spin spin, Parity r, const PhysParams& p);

/// A_n = kz/(E_n+m), B_n = sqrt(2 n eB)/(E_n+m), eta_n = (E_n+m)/(2E_n).
Coefficients coefficients(int n, const PhysParams& p);
Coefficients coefficients(const LandauState& st);

/// Component layout of u^{spin}_{n,r}: component i is
///   sqrt(eta) * coeff[i] * F_{order[i]}(s_r),
/// with order -1 meaning an identically zero component.
struct SpinorLayout {
  std::array<double, 4> coeff{};
  std::array<int, 4> order{};
};

SpinorLayout spinor_layout(const LandauState& st);

using Spinor4 = std::array<std::complex<double>, 4>;

/// u^{spin}_{n,r} at position x (units eB^{1/4}). Plane-wave and time
/// factors are dropped.
Spinor4 spinor(const LandauState& st, double x);
/// Same, evaluated directly at the orbit coordinate s.
Spinor4 spinor_at_s(const LandauState& st, double s);

}  // namespace dwl::landau

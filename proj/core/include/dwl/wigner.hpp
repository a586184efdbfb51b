#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "dwl/clifford.hpp"
#include "dwl/landau.hpp"
#include "dwl/numerics.hpp"

namespace dwl::wigner {

using landau::LandauState;
using landau::Spinor4;

/// L_n(s,k) = (-1)^n (sqrt(eB)/pi) exp(-(s^2+k^2)) L_n[2(s^2+k^2)].
/// Normalised to \iint dx dk = 1 (ds = sqrt(eB) dx). Zero for n = -1.
double kernel_L(int n, PhasePoint p, double eB);

/// M_n(s,k) = (-1)^n (1/pi) sqrt(eB/(8n)) exp(-(s^2+k^2)) d/ds L_n[2(s^2+k^2)].
/// Real part of the cross term between F_{n-1} and F_n; odd in s.
double kernel_M(int n, PhasePoint p, double eB);

/// Momentum companion of kernel_M: N_n(s,k) = M_n(k,s), odd in k. The
/// cross term pairing F_{n-1}(s+u) with F_n(s-u) is M_n - i N_n.
double kernel_N(int n, PhasePoint p, double eB);

/// All kernels a level-n state needs, from one exp and one Laguerre pass.
struct KernelSet {
  double L_lower = 0.0;  // L_{n-1}
  double L_upper = 0.0;  // L_n
  double M = 0.0;
  double N = 0.0;
};

KernelSet kernels(int n, PhasePoint p, double eB);

/// The 4x4 Wigner matrix omega = W gamma0 of a Landau state, where
/// W_{xi lambda} = pi^{-1} \int du e^{2iku} psi_xi(s+u) psi*_lambda(s-u).
/// Its real part is the familiar table of L, M entries; the imaginary part
/// carries the antisymmetric N terms.
ComplexMatrix4 omega_matrix(const LandauState& st, PhasePoint p);
ComplexMatrix4 omega_from_kernels(const LandauState& st, const KernelSet& k);

/// rho = Tr[omega gamma0].
double density(const LandauState& st, PhasePoint p);

/// A lazily evaluated matrix-valued phase-space field. Landau fields and
/// their convex mixtures are the common cases; any evaluator works.
class WignerMatrixField {
 public:
  using Evaluator = std::function<ComplexMatrix4(PhasePoint)>;

  WignerMatrixField(double eB, Evaluator evaluator);

  static WignerMatrixField landau(const LandauState& st);
  /// Convex combination; weights must be non-negative and sum to 1 and all
  /// states must share eB.
  static WignerMatrixField mixture(const std::vector<std::pair<double, LandauState>>& parts);

  ComplexMatrix4 operator()(PhasePoint p) const { return evaluator_(p); }
  double eB() const { return eB_; }

 private:
  double eB_;
  Evaluator evaluator_;
};

/// A 4-component wavefunction sampled on a uniform grid of the orbit
/// coordinate s.
struct SampledSpinor {
  std::vector<double> s;
  std::vector<Spinor4> psi;
};

SampledSpinor sample_spinor(const LandauState& st, double s_min, double s_max, int points);

/// Default sampling window for level n: [-12 - sqrt(2(2n+1)), +...], 2048 points.
SampledSpinor sample_spinor_default(const LandauState& st);

/// Numerical Weyl transform of sampled data. p.s must sit on the half-lattice
/// of the sample grid (a grid point or a midpoint); the grid must be uniform
/// and the wavefunction negligible (< 1e-12 of its peak) at both ends.
/// Throws std::invalid_argument otherwise.
ComplexMatrix4 weyl_transform(const SampledSpinor& sampled, PhasePoint p);

struct UGrid {
  double half_width = 14.0;
  int points = 2048;
};

UGrid default_u_grid(int n);

/// Numerical Weyl transform of a callable wavefunction, trapezoid in u.
ComplexMatrix4 weyl_transform(const std::function<Spinor4(double)>& psi, PhasePoint p,
                              const UGrid& u = {});

}  // namespace dwl::wigner

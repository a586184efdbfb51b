#pragma once

#include <array>
#include <map>
#include <string>

#include "dwl/clifford.hpp"
#include "dwl/landau.hpp"
#include "dwl/numerics.hpp"
#include "dwl/wigner.hpp"

namespace dwl::quant {

using landau::LandauState;
using numerics::LineGrid;
using numerics::QuadratureGrid;
using wigner::WignerMatrixField;

/// Resolution control for quadrature-backed quantities. With check set, the
/// value is recomputed on the refined grid and NumericalError is thrown when
/// the two differ by more than tolerance.
struct Accuracy {
  bool check = false;
  double tolerance = 1e-8;
};

// ---- purity ---------------------------------------------------------------

/// (2pi/eB) \iint ds dk Tr[omega g0 omega g0], i.e. (2pi/sqrt(eB)) \iint dx dk.
double purity_trace(const WignerMatrixField& field, const QuadratureGrid& grid, Accuracy acc = {});
double purity_trace(const LandauState& st, const QuadratureGrid& grid, Accuracy acc = {});

/// 4 (2pi/eB) \iint [|S|^2 + |Pi|^2 + sum|V|^2 + sum|A|^2 + 1/2 sum|T|^2],
/// Euclidean index sums over the pointwise Clifford decomposition.
double purity_clifford(const WignerMatrixField& field, const QuadratureGrid& grid, Accuracy acc = {});
double purity_clifford(const LandauState& st, const QuadratureGrid& grid, Accuracy acc = {});

struct PurityPair {
  double trace = 0.0;
  double clifford = 0.0;
};

/// Both routes from a single pass over the grid.
PurityPair purity_routes(const WignerMatrixField& field, const QuadratureGrid& grid);

struct CoordinatePurity {
  double dagger = 0.0;  // rho = psi^dagger psi
  double bar = 0.0;     // rho = psibar psi
};

/// \iint dx du rho(x - u/2) rho(x + u/2) for both density candidates. The
/// grid is in x and must cover the spinor support.
CoordinatePurity purity_coordinate_routes(const LandauState& st, const LineGrid& xgrid);
/// The psi^dagger psi value.
double purity_coordinate(const LandauState& st, const LineGrid& xgrid, Accuracy acc = {});

/// x-grid centred on the orbit with the same half-width as default_grid.
LineGrid default_x_grid(const LandauState& st, double pad = 6.0, int points = 512);

/// Tr[omega g0 omega g0] at p:
///   eta^2 [(1+A^2)^2 L_a^2 + 2 B^2 (1+A^2)(M^2 + N^2) + B^4 L_b^2],
/// where a is the dominant Laguerre order. Non-negative.
double local_purity(const LandauState& st, PhasePoint p);

// ---- entropies and mutual information -------------------------------------

/// 1 - eta^2 [(1+A^2)^2 + B^4].
double entropy_sp_closed(const LandauState& st);

struct EntropySP {
  double closed = 0.0;
  double definition = 0.0;  // 1 - Tr[(g0 <omega>)^2], <omega> = \iint dx dk omega
};

EntropySP entropy_sp_routes(const LandauState& st, const QuadratureGrid& grid);
/// Closed form; with acc.check the quadrature definition must agree within
/// acc.tolerance.
double entropy_sp(const LandauState& st, const QuadratureGrid& grid, Accuracy acc = {});

/// 1 - (2pi/sqrt(eB)) \iint dx dk rho^2.
double entropy_xk(const LandauState& st, const QuadratureGrid& grid, Accuracy acc = {});

/// 2 n eps / (1 + kappa + 2 n eps) * [1 + kappa / (sqrt(1 + kappa + 2 n eps) + 1)^2].
double mutual_information(int n, double eps, double kappa);

struct MutualInfoParts {
  double entropy_xk = 0.0;
  double entropy_sp = 0.0;  // quadrature definition
  double purity = 0.0;
  double value = 0.0;       // I_xk + I_sp - (1 - P)
};

MutualInfoParts mutual_information_parts(const LandauState& st, const QuadratureGrid& grid);
double mutual_information_from_parts(const LandauState& st, const QuadratureGrid& grid);

// ---- two-qubit concurrence ------------------------------------------------

/// (sy x sy) M^* (sy x sy).
ComplexMatrix4 spin_flip(const ComplexMatrix4& m);

/// A validated two-qubit density matrix: unit trace (1e-10), Hermitian
/// (1e-12), eigenvalues >= -1e-10. Throws std::invalid_argument otherwise.
class TwoQubitDensity {
 public:
  explicit TwoQubitDensity(const ComplexMatrix4& m);
  /// |v><v| / <v|v>.
  static TwoQubitDensity pure(const std::array<cplx, 4>& v);

  const ComplexMatrix4& matrix() const { return m_; }
  double purity() const;

 private:
  ComplexMatrix4 m_;
};

/// Wootters concurrence max(w1 - w2 - w3 - w4, 0).
double concurrence_general(const TwoQubitDensity& rho);

struct BlochDecomposition {
  std::array<double, 3> a{};  // Tr[(s_i x I) rho]
  std::array<double, 3> b{};  // Tr[(I x s_i) rho]
  std::array<std::array<double, 3>, 3> t{};  // Tr[(s_i x s_j) rho]
};

BlochDecomposition bloch_decomposition(const TwoQubitDensity& rho);

/// sqrt(1 - |a|^2). Throws PreconditionError unless Tr[rho^2] = 1 within 1e-8.
double concurrence_pure_bloch(const TwoQubitDensity& rho);

/// -2 eta^2 B^2 L_n L_{n-1}, the closed form as usually quoted. Signed, not
/// clamped.
double concurrence_sq_field(const LandauState& st, PhasePoint p);
/// -Tr[omega g2 g0 omega g2 g0].
double concurrence_sq_trace(const LandauState& st, PhasePoint p);
/// Closed form of the trace route: 2 eta^2 B^2 (L_n L_{n-1} + M^2 - N^2).
double concurrence_sq_corrected(const LandauState& st, PhasePoint p);

struct ConcurrenceIntegrals {
  double closed = 0.0;
  double trace = 0.0;
};

/// (2pi/sqrt(eB)) \iint dx dk of both field forms.
ConcurrenceIntegrals concurrence_sq_integral(const LandauState& st, const QuadratureGrid& grid);

/// -l log2 l - (1-l) log2 (1-l), with 0 log 0 = 0. l in [0,1].
double binary_entropy(double lambda);
/// Entanglement of formation h((1 - sqrt(1 - C^2))/2). C in [0,1].
double eof_from_concurrence(double c);

// ---- currents -------------------------------------------------------------

struct CurrentDensities {
  double j0 = 0.0;
  std::array<double, 3> j{};   // j^1..j^3
  std::array<double, 4> j5{};  // axial j5^0..j5^3
  double spin_z = 0.0;         // \int dk Tr[g0 Sigma^z omega]
};

/// k-integrated Clifford components at position x: j^mu = 4 \int dk V^mu,
/// j5^mu = 4 \int dk A^mu. The k grid is dimensionless.
CurrentDensities currents(const LandauState& st, double x, const LineGrid& kgrid);

/// \int dx j0 with the x grid in physical units.
double integrated_charge(const LandauState& st, const LineGrid& xgrid, const LineGrid& kgrid);

struct SpinExpectation {
  double tensor = 0.0;  // \iint dx dk Tr[g0 Sigma^z omega]
  double direct = 0.0;  // \int dx psi^dagger Sigma^z psi
  double residual() const;
};

SpinExpectation spin_expectation_z(const LandauState& st, const QuadratureGrid& grid);

// ---- summary --------------------------------------------------------------

struct QuantifierReport {
  double purity_trace = 0.0;
  double purity_clifford = 0.0;
  double purity_coordinate = 0.0;
  double entropy_sp = 0.0;
  double entropy_xk = 0.0;
  double mutual_info_def = 0.0;
  double mutual_info_closed = 0.0;
  double concurrence_sq_integral = 0.0;
  std::map<std::string, double> residuals;
};

QuantifierReport analyze(const LandauState& st, const QuadratureGrid& grid, const LineGrid& xgrid);

}  // namespace dwl::quant

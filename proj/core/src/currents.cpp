#include <cmath>
#include <stdexcept>
#include <vector>

#include "dwl/quantifiers.hpp"

namespace dwl::quant {

namespace {

struct Components {
  std::array<double, 9> v{};  // V^0..V^3, A^0..A^3, spin_z
  Components& operator+=(const Components& o) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
    return *this;
  }
  Components& operator*=(double w) {
    for (double& x : v) x *= w;
    return *this;
  }
};

const ComplexMatrix4& g0_sigma_z() {
  static const ComplexMatrix4 m = gamma(0) * sigma(1, 2);
  return m;
}

}  // namespace

CurrentDensities currents(const LandauState& st, double x, const LineGrid& kgrid) {
  if (kgrid.points < 16 || !(kgrid.hi > kgrid.lo)) throw std::invalid_argument("currents: bad k grid");
  const double s = landau::s_coordinate(x, st);
  const auto nodes = numerics::linspace(kgrid.lo, kgrid.hi, kgrid.points);
  const double dk = nodes[1] - nodes[0];
  std::vector<Components> terms(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const ComplexMatrix4 w = wigner::omega_matrix(st, PhasePoint{s, nodes[j]});
    const auto c = decompose(w);
    Components& t = terms[j];
    for (int mu = 0; mu < 4; ++mu) {
      t.v[mu] = c.V[mu].real();
      t.v[4 + mu] = c.A[mu].real();
    }
    t.v[8] = trace_of_product(g0_sigma_z(), w).real();
    t *= (j == 0 || j + 1 == nodes.size()) ? 0.5 * dk : dk;
  }
  const Components sum = numerics::pairwise_sum<Components>(terms);
  CurrentDensities out;
  out.j0 = 4.0 * sum.v[0];
  for (int i = 0; i < 3; ++i) out.j[i] = 4.0 * sum.v[1 + i];
  for (int mu = 0; mu < 4; ++mu) out.j5[mu] = 4.0 * sum.v[4 + mu];
  out.spin_z = sum.v[8];
  return out;
}

double integrated_charge(const LandauState& st, const LineGrid& xgrid, const LineGrid& kgrid) {
  return numerics::integrate_1d([&](double x) { return currents(st, x, kgrid).j0; }, xgrid.lo, xgrid.hi,
                                xgrid.points);
}

double SpinExpectation::residual() const { return std::abs(tensor - direct); }

SpinExpectation spin_expectation_z(const LandauState& st, const QuadratureGrid& grid) {
  const double root = std::sqrt(st.params().eB);
  SpinExpectation out;
  out.tensor = numerics::integrate_grid<double>(grid, [&](PhasePoint p) {
                 return trace_of_product(g0_sigma_z(), wigner::omega_matrix(st, p)).real();
               }) /
               root;
  // Sigma^z = diag(1, -1, 1, -1)
  out.direct = numerics::integrate_1d(
                   [&](double s) {
                     const auto psi = landau::spinor_at_s(st, s);
                     return std::norm(psi[0]) - std::norm(psi[1]) + std::norm(psi[2]) - std::norm(psi[3]);
                   },
                   grid.s_min(), grid.s_max(), grid.n_s()) /
               root;
  return out;
}

}  // namespace dwl::quant

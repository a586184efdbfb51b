#include "dwl/wigner.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dwl/specfun.hpp"

namespace dwl::wigner {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::array<double, 4> kGamma0Diag{1.0, 1.0, -1.0, -1.0};

void require_eB(double eB) {
  if (!(eB > 0.0) || !std::isfinite(eB)) throw std::invalid_argument("eB must be positive and finite");
}

double parity_sign(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

// Cross-Wigner of F_a, F_b (a, b in {n-1, n}) from a kernel set.
cplx pair_kernel(int a, int b, int n, const KernelSet& k) {
  if (a < 0 || b < 0) return 0.0;
  if (a == b) return a == n ? k.L_upper : k.L_lower;
  if (a == n - 1) return {k.M, -k.N};
  return {k.M, k.N};
}

}  // namespace

double kernel_L(int n, PhasePoint p, double eB) {
  require_eB(eB);
  if (n < -1) throw std::invalid_argument("kernel_L: n must be >= -1");
  if (n == -1) return 0.0;
  const double r2 = p.s * p.s + p.k * p.k;
  return parity_sign(n) * std::sqrt(eB) / kPi * std::exp(-r2) * specfun::laguerre(n, 2.0 * r2);
}

double kernel_M(int n, PhasePoint p, double eB) {
  require_eB(eB);
  if (n < 1) throw std::invalid_argument("kernel_M: n must be >= 1");
  const double r2 = p.s * p.s + p.k * p.k;
  return parity_sign(n) / kPi * std::sqrt(eB / (8.0 * n)) * std::exp(-r2) * 4.0 * p.s *
         specfun::laguerre_deriv(n, 2.0 * r2);
}

double kernel_N(int n, PhasePoint p, double eB) { return kernel_M(n, PhasePoint{p.k, p.s}, eB); }

KernelSet kernels(int n, PhasePoint p, double eB) {
  require_eB(eB);
  if (n < 1) throw std::invalid_argument("kernels: n must be >= 1");
  const double r2 = p.s * p.s + p.k * p.k;
  const double g = std::exp(-r2) / kPi;
  const auto lt = specfun::laguerre_triple(n, 2.0 * r2);
  const double sign = parity_sign(n);
  const double rt = std::sqrt(eB);
  const double cross = sign * g * std::sqrt(eB / (8.0 * n)) * 4.0 * lt.deriv;
  KernelSet k;
  k.L_upper = sign * rt * g * lt.value;
  k.L_lower = -sign * rt * g * lt.prev;
  k.M = cross * p.s;
  k.N = cross * p.k;
  return k;
}

ComplexMatrix4 omega_from_kernels(const LandauState& st, const KernelSet& k) {
  const auto lay = landau::spinor_layout(st);
  const double eta = st.eta();
  const int n = st.n();
  ComplexMatrix4 w;
  for (int i = 0; i < 4; ++i) {
    if (lay.order[i] < 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (lay.order[j] < 0) continue;
      w(i, j) = eta * lay.coeff[i] * lay.coeff[j] * kGamma0Diag[j] *
                pair_kernel(lay.order[i], lay.order[j], n, k);
    }
  }
  return w;
}

ComplexMatrix4 omega_matrix(const LandauState& st, PhasePoint p) {
  return omega_from_kernels(st, kernels(st.n(), p, st.params().eB));
}

double density(const LandauState& st, PhasePoint p) {
  const auto k = kernels(st.n(), p, st.params().eB);
  const double eta = st.eta();
  const double a2 = st.A() * st.A();
  const double b2 = st.B() * st.B();
  if (st.lower_order_dominant()) return eta * ((1.0 + a2) * k.L_lower + b2 * k.L_upper);
  return eta * ((1.0 + a2) * k.L_upper + b2 * k.L_lower);
}

WignerMatrixField::WignerMatrixField(double eB, Evaluator evaluator)
    : eB_(eB), evaluator_(std::move(evaluator)) {
  require_eB(eB);
  if (!evaluator_) throw std::invalid_argument("WignerMatrixField: empty evaluator");
}

WignerMatrixField WignerMatrixField::landau(const LandauState& st) {
  return WignerMatrixField(st.params().eB, [st](PhasePoint p) { return omega_matrix(st, p); });
}

WignerMatrixField WignerMatrixField::mixture(
    const std::vector<std::pair<double, LandauState>>& parts) {
  if (parts.empty()) throw std::invalid_argument("mixture: no components");
  const double eB = parts.front().second.params().eB;
  double total = 0.0;
  for (const auto& [w, st] : parts) {
    if (!(w >= 0.0)) throw std::invalid_argument("mixture: negative weight");
    if (st.params().eB != eB) throw std::invalid_argument("mixture: components differ in eB");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("mixture: weights must sum to 1");
  return WignerMatrixField(eB, [parts](PhasePoint p) {
    ComplexMatrix4 acc;
    for (const auto& [w, st] : parts) acc += omega_matrix(st, p) * cplx(w);
    return acc;
  });
}

SampledSpinor sample_spinor(const LandauState& st, double s_min, double s_max, int points) {
  if (points < 16 || !(s_max > s_min)) throw std::invalid_argument("sample_spinor: bad grid");
  SampledSpinor out;
  out.s = numerics::linspace(s_min, s_max, points);
  out.psi.reserve(out.s.size());
  for (double s : out.s) out.psi.push_back(landau::spinor_at_s(st, s));
  return out;
}

UGrid default_u_grid(int n) {
  return UGrid{12.0 + std::sqrt(2.0 * (2 * n + 1)), 2048};
}

SampledSpinor sample_spinor_default(const LandauState& st) {
  const UGrid g = default_u_grid(st.n());
  return sample_spinor(st, -g.half_width, g.half_width, g.points);
}

ComplexMatrix4 weyl_transform(const SampledSpinor& sampled, PhasePoint p) {
  const auto& s = sampled.s;
  const auto& psi = sampled.psi;
  const std::size_t count = s.size();
  if (count < 16 || psi.size() != count) throw std::invalid_argument("weyl_transform: need >= 16 matching samples");
  const double h = (s.back() - s.front()) / static_cast<double>(count - 1);
  if (!(h > 0.0)) throw std::invalid_argument("weyl_transform: grid must be increasing");
  for (std::size_t i = 0; i < count; ++i) {
    const double expect = s.front() + h * static_cast<double>(i);
    if (std::abs(s[i] - expect) > 1e-9 * h) throw std::invalid_argument("weyl_transform: grid is not uniform");
  }
  double peak = 0.0;
  for (const auto& v : psi)
    for (const auto& c : v) peak = std::max(peak, std::abs(c));
  auto edge = [&](std::size_t i) {
    double m = 0.0;
    for (const auto& c : psi[i]) m = std::max(m, std::abs(c));
    return m;
  };
  if (edge(0) > 1e-12 * peak || edge(count - 1) > 1e-12 * peak)
    throw std::invalid_argument("weyl_transform: wavefunction not negligible at grid boundary");

  // s = (s_a + s_b)/2 must be a half-lattice point: a + b = m.
  const double mf = 2.0 * (p.s - s.front()) / h;
  const double mr = std::round(mf);
  if (std::abs(mf - mr) > 1e-6) throw std::invalid_argument("weyl_transform: probe s is off the half-lattice");
  const long m = static_cast<long>(mr);
  const long last = static_cast<long>(count) - 1;
  ComplexMatrix4 w;
  if (m < 0 || m > 2 * last) return w;

  for (long a = std::max(0L, m - last); a <= std::min(last, m); ++a) {
    const long b = m - a;
    const double u = 0.5 * h * static_cast<double>(a - b);
    const cplx phase = std::polar(1.0, 2.0 * p.k * u);
    const auto& up = psi[static_cast<std::size_t>(a)];
    const auto& dn = psi[static_cast<std::size_t>(b)];
    for (int i = 0; i < 4; ++i) {
      if (up[i] == 0.0) continue;
      const cplx left = phase * up[i];
      for (int j = 0; j < 4; ++j) w(i, j) += left * std::conj(dn[j]);
    }
  }
  // du = h: a and b step in opposite directions, so u advances by h.
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) w(i, j) *= h * kGamma0Diag[j] / kPi;
  return w;
}

ComplexMatrix4 weyl_transform(const std::function<Spinor4(double)>& psi, PhasePoint p, const UGrid& u) {
  if (u.points < 16 || !(u.half_width > 0.0)) throw std::invalid_argument("weyl_transform: bad u grid");
  const auto nodes = numerics::linspace(-u.half_width, u.half_width, u.points);
  const double du = nodes[1] - nodes[0];
  ComplexMatrix4 w;
  for (std::size_t q = 0; q < nodes.size(); ++q) {
    const double weight = (q == 0 || q + 1 == nodes.size()) ? 0.5 * du : du;
    const Spinor4 up = psi(p.s + nodes[q]);
    const Spinor4 dn = psi(p.s - nodes[q]);
    const cplx phase = std::polar(weight, 2.0 * p.k * nodes[q]);
    for (int i = 0; i < 4; ++i) {
      if (up[i] == 0.0) continue;
      const cplx left = phase * up[i];
      for (int j = 0; j < 4; ++j) w(i, j) += left * std::conj(dn[j]);
    }
  }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) w(i, j) *= kGamma0Diag[j] / kPi;
  return w;
}

}  // namespace dwl::wigner

#include "dwl/quantifiers.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "dwl/errors.hpp"

namespace dwl::quant {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::array<double, 4> kG0{1.0, 1.0, -1.0, -1.0};

struct Pair {
  double a = 0.0;
  double b = 0.0;
  Pair& operator+=(const Pair& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  Pair& operator*=(double w) {
    a *= w;
    b *= w;
    return *this;
  }
};

// Tr[m g0 m g0]
double trace_g0_squared(const ComplexMatrix4& m) {
  double acc = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) acc += kG0[i] * kG0[j] * (m(i, j) * m(j, i)).real();
  return acc;
}

void check_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw NumericalError(std::string(what) + ": non-finite quadrature result");
}

template <class F>
double with_accuracy(const QuadratureGrid& grid, Accuracy acc, const char* what, F&& eval) {
  const double value = eval(grid);
  check_finite(value, what);
  if (acc.check) {
    const double refined = eval(grid.refined());
    const double residual = std::abs(refined - value);
    if (!(residual <= acc.tolerance))
      throw NumericalError(std::string(what) + ": grid under-resolved, refinement residual " +
                           std::to_string(residual));
  }
  return value;
}

}  // namespace

PurityPair purity_routes(const WignerMatrixField& field, const QuadratureGrid& grid) {
  const Pair sum = numerics::integrate_grid<Pair>(grid, [&](PhasePoint p) {
    const ComplexMatrix4 w = field(p);
    return Pair{trace_g0_squared(w), 4.0 * decompose(w).euclidean_norm2()};
  });
  const double scale = kTwoPi / field.eB();
  PurityPair out{scale * sum.a, scale * sum.b};
  check_finite(out.trace, "purity");
  check_finite(out.clifford, "purity");
  return out;
}

double purity_trace(const WignerMatrixField& field, const QuadratureGrid& grid, Accuracy acc) {
  return with_accuracy(grid, acc, "purity_trace", [&](const QuadratureGrid& g) {
    return kTwoPi / field.eB() *
           numerics::integrate_grid<double>(g, [&](PhasePoint p) { return trace_g0_squared(field(p)); });
  });
}

double purity_trace(const LandauState& st, const QuadratureGrid& grid, Accuracy acc) {
  return purity_trace(WignerMatrixField::landau(st), grid, acc);
}

double purity_clifford(const WignerMatrixField& field, const QuadratureGrid& grid, Accuracy acc) {
  return with_accuracy(grid, acc, "purity_clifford", [&](const QuadratureGrid& g) {
    return 4.0 * kTwoPi / field.eB() * numerics::integrate_grid<double>(g, [&](PhasePoint p) {
             return decompose(field(p)).euclidean_norm2();
           });
  });
}

double purity_clifford(const LandauState& st, const QuadratureGrid& grid, Accuracy acc) {
  return purity_clifford(WignerMatrixField::landau(st), grid, acc);
}

CoordinatePurity purity_coordinate_routes(const LandauState& st, const LineGrid& xgrid) {
  if (xgrid.points < 16 || !(xgrid.hi > xgrid.lo))
    throw std::invalid_argument("purity_coordinate: bad x grid");
  const int n = xgrid.points;
  const int half_count = 2 * n - 1;
  const double h = (xgrid.hi - xgrid.lo) / (n - 1);
  // densities on the half-spacing lattice
  std::vector<double> dagger(half_count), bar(half_count);
  for (int q = 0; q < half_count; ++q) {
    const auto psi = landau::spinor(st, xgrid.lo + 0.5 * h * q);
    double d = 0.0, b = 0.0;
    for (int i = 0; i < 4; ++i) {
      const double v = std::norm(psi[i]);
      d += v;
      b += kG0[i] * v;
    }
    dagger[q] = d;
    bar[q] = b;
  }
  std::vector<Pair> rows(n);
  numerics::parallel_for(static_cast<std::size_t>(n), [&](std::size_t idx) {
    const int i = static_cast<int>(idx);
    const int reach = std::min(2 * i, half_count - 1 - 2 * i);
    std::vector<Pair> terms;
    terms.reserve(2 * reach + 1);
    for (int j = -reach; j <= reach; ++j)
      terms.push_back(Pair{dagger[2 * i - j] * dagger[2 * i + j], bar[2 * i - j] * bar[2 * i + j]});
    rows[idx] = numerics::pairwise_sum<Pair>(terms);
  });
  Pair total = numerics::pairwise_sum<Pair>(rows);
  total *= h * h;
  check_finite(total.a, "purity_coordinate");
  return {total.a, total.b};
}

double purity_coordinate(const LandauState& st, const LineGrid& xgrid, Accuracy acc) {
  const double value = purity_coordinate_routes(st, xgrid).dagger;
  if (acc.check) {
    const double residual = std::abs(purity_coordinate_routes(st, xgrid.refined()).dagger - value);
    if (!(residual <= acc.tolerance))
      throw NumericalError("purity_coordinate: grid under-resolved, refinement residual " +
                           std::to_string(residual));
  }
  return value;
}

LineGrid default_x_grid(const LandauState& st, double pad, int points) {
  const double half = numerics::default_half_width(st.n(), pad);
  const auto& p = st.params();
  return {landau::x_coordinate(-half, st.parity(), p), landau::x_coordinate(half, st.parity(), p), points};
}

double local_purity(const LandauState& st, PhasePoint p) {
  const auto k = wigner::kernels(st.n(), p, st.params().eB);
  const double a2 = st.A() * st.A();
  const double b2 = st.B() * st.B();
  const double eta2 = st.eta() * st.eta();
  const double dom = st.lower_order_dominant() ? k.L_lower : k.L_upper;
  const double sub = st.lower_order_dominant() ? k.L_upper : k.L_lower;
  return eta2 * ((1.0 + a2) * (1.0 + a2) * dom * dom + 2.0 * b2 * (1.0 + a2) * (k.M * k.M + k.N * k.N) +
                 b2 * b2 * sub * sub);
}

double entropy_sp_closed(const LandauState& st) {
  const double a2 = st.A() * st.A();
  const double b2 = st.B() * st.B();
  return 1.0 - st.eta() * st.eta() * ((1.0 + a2) * (1.0 + a2) + b2 * b2);
}

EntropySP entropy_sp_routes(const LandauState& st, const QuadratureGrid& grid) {
  ComplexMatrix4 mean = numerics::integrate_grid<ComplexMatrix4>(
      grid, [&](PhasePoint p) { return wigner::omega_matrix(st, p); });
  mean *= 1.0 / std::sqrt(st.params().eB);
  EntropySP out;
  out.closed = entropy_sp_closed(st);
  out.definition = 1.0 - trace_g0_squared(mean);
  check_finite(out.definition, "entropy_sp");
  return out;
}

double entropy_sp(const LandauState& st, const QuadratureGrid& grid, Accuracy acc) {
  const EntropySP e = entropy_sp_routes(st, grid);
  if (acc.check && !(std::abs(e.closed - e.definition) <= acc.tolerance))
    throw NumericalError("entropy_sp: quadrature definition disagrees with closed form by " +
                         std::to_string(std::abs(e.closed - e.definition)));
  return e.closed;
}

double entropy_xk(const LandauState& st, const QuadratureGrid& grid, Accuracy acc) {
  return with_accuracy(grid, acc, "entropy_xk", [&](const QuadratureGrid& g) {
    const double sq = numerics::integrate_grid<double>(g, [&](PhasePoint p) {
      const double r = wigner::density(st, p);
      return r * r;
    });
    return 1.0 - kTwoPi / st.params().eB * sq;
  });
}

double mutual_information(int n, double eps, double kappa) {
  if (n < 0) throw std::invalid_argument("mutual_information: n must be >= 0");
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("mutual_information: eps must be > 0");
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) throw std::invalid_argument("mutual_information: kappa must be >= 0");
  const double x = 2.0 * n * eps;
  const double d = 1.0 + kappa + x;
  const double root = std::sqrt(d) + 1.0;
  return x / d * (1.0 + kappa / (root * root));
}

MutualInfoParts mutual_information_parts(const LandauState& st, const QuadratureGrid& grid) {
  MutualInfoParts out;
  out.entropy_xk = entropy_xk(st, grid);
  out.entropy_sp = entropy_sp_routes(st, grid).definition;
  out.purity = purity_trace(st, grid);
  out.value = out.entropy_xk + out.entropy_sp - (1.0 - out.purity);
  return out;
}

double mutual_information_from_parts(const LandauState& st, const QuadratureGrid& grid) {
  return mutual_information_parts(st, grid).value;
}

QuantifierReport analyze(const LandauState& st, const QuadratureGrid& grid, const LineGrid& xgrid) {
  QuantifierReport r;
  const auto field = WignerMatrixField::landau(st);
  const PurityPair pp = purity_routes(field, grid);
  const CoordinatePurity cp = purity_coordinate_routes(st, xgrid);
  const EntropySP sp = entropy_sp_routes(st, grid);
  const auto conc = concurrence_sq_integral(st, grid);
  const auto& params = st.params();

  r.purity_trace = pp.trace;
  r.purity_clifford = pp.clifford;
  r.purity_coordinate = cp.dagger;
  r.entropy_sp = sp.closed;
  r.entropy_xk = entropy_xk(st, grid);
  r.mutual_info_def = r.entropy_xk + sp.definition - (1.0 - pp.trace);
  r.mutual_info_closed = mutual_information(st.n(), params.eps(), params.kappa());
  r.concurrence_sq_integral = conc.closed;

  r.residuals["purity_trace_vs_clifford"] = std::abs(pp.trace - pp.clifford);
  r.residuals["purity_trace_vs_coordinate"] = std::abs(pp.trace - cp.dagger);
  r.residuals["purity_trace_vs_coordinate_psibar"] = std::abs(pp.trace - cp.bar);
  r.residuals["entropy_sp_definition_vs_closed"] = std::abs(sp.definition - sp.closed);
  r.residuals["entropy_sp_vs_xk"] = std::abs(sp.closed - r.entropy_xk);
  r.residuals["mutual_info_def_vs_closed"] = std::abs(r.mutual_info_def - r.mutual_info_closed);
  r.residuals["concurrence_sq_integral_trace"] = std::abs(conc.trace);
  return r;
}

}  // namespace dwl::quant

#include "dwl/numerics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <Eigen/Dense>

#include "dwl/errors.hpp"
#include "dwl/specfun.hpp"

namespace dwl::numerics {

namespace {

void trapezoid_axis(double lo, double hi, int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes = linspace(lo, hi, n);
  const double h = (hi - lo) / (n - 1);
  weights.assign(n, h);
  weights.front() = weights.back() = 0.5 * h;
}

// Golub-Welsch eigenvalues as starting nodes, polished by Newton on the
// normalised Hermite function; weights (times e^{x^2}) are 1/(n phi_{n-1}^2),
// which stays accurate in the tails where eigenvector components do not.
void gauss_hermite_axis(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    jacobi(i, i - 1) = jacobi(i - 1, i) = std::sqrt(0.5 * i);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi, Eigen::EigenvaluesOnly);
  const auto& x0 = solver.eigenvalues();
  nodes.resize(n);
  weights.resize(n);
  std::vector<double> phi(n + 1);
  for (int i = 0; i < n; ++i) {
    double x = x0(i);
    for (int it = 0; it < 3; ++it) {
      specfun::hermite_fn_sequence(x, phi);
      const double dphi = std::sqrt(2.0 * n) * phi[n - 1] - x * phi[n];
      x -= phi[n] / dphi;
    }
    specfun::hermite_fn_sequence(x, phi);
    nodes[i] = x;
    weights[i] = 1.0 / (n * phi[n - 1] * phi[n - 1]);
  }
}

}  // namespace

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(n);
  const double h = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) out[i] = lo + h * i;
  out.back() = hi;
  return out;
}

QuadratureGrid QuadratureGrid::trapezoid(double s_min, double s_max, int n_s, double k_min,
                                         double k_max, int n_k) {
  if (n_s < 16 || n_k < 16) throw std::invalid_argument("QuadratureGrid: need at least 16 points per axis");
  if (!std::isfinite(s_min) || !std::isfinite(s_max) || !std::isfinite(k_min) ||
      !std::isfinite(k_max) || !(s_max > s_min) || !(k_max > k_min)) {
    throw std::invalid_argument("QuadratureGrid: bounds must be finite and increasing");
  }
  QuadratureGrid g;
  g.rule_ = QuadratureRule::Trapezoid;
  trapezoid_axis(s_min, s_max, n_s, g.s_, g.ws_);
  trapezoid_axis(k_min, k_max, n_k, g.k_, g.wk_);
  return g;
}

QuadratureGrid QuadratureGrid::gauss_hermite(int n_s, int n_k) {
  if (n_s < 16 || n_k < 16) throw std::invalid_argument("QuadratureGrid: need at least 16 points per axis");
  if (n_s > 200 || n_k > 200) {
    throw std::invalid_argument("QuadratureGrid: Gauss-Hermite limited to 200 nodes per axis");
  }
  QuadratureGrid g;
  g.rule_ = QuadratureRule::GaussHermite;
  gauss_hermite_axis(n_s, g.s_, g.ws_);
  gauss_hermite_axis(n_k, g.k_, g.wk_);
  return g;
}

QuadratureGrid QuadratureGrid::refined() const {
  if (rule_ == QuadratureRule::GaussHermite) {
    return gauss_hermite(std::min(2 * n_s(), 200), std::min(2 * n_k(), 200));
  }
  return trapezoid(s_min(), s_max(), 2 * n_s() - 1, k_min(), k_max(), 2 * n_k() - 1);
}

double default_half_width(int n_max, double pad) {
  if (n_max < 0) throw std::invalid_argument("default_grid: n_max must be >= 0");
  return std::sqrt(2.0 * (2.0 * n_max + 1.0)) + pad;
}

QuadratureGrid default_grid(int n_max, double pad, int points) {
  const double half = default_half_width(n_max, pad);
  return QuadratureGrid::trapezoid(-half, half, points, -half, half, points);
}

unsigned worker_count() {
  if (const char* env = std::getenv("DWL_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto run = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      if (failed.load()) return;
      try {
        body(i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

double integrate_2d(const std::function<double(PhasePoint)>& f, const QuadratureGrid& grid) {
  return integrate_grid<double>(grid, [&](PhasePoint p) {
    const double v = f(p);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "integrate_2d: non-finite integrand " << v << " at (s=" << p.s << ", k=" << p.k << ")";
      throw NumericalError(msg.str());
    }
    return v;
  });
}

double ResolutionCheck::residual() const { return std::abs(value - refined); }

ResolutionCheck integrate_2d_checked(const std::function<double(PhasePoint)>& f,
                                     const QuadratureGrid& grid) {
  return ResolutionCheck{integrate_2d(f, grid), integrate_2d(f, grid.refined())};
}

double integrate_1d(const std::function<double(double)>& f, double lo, double hi, int n) {
  if (n < 16) throw std::invalid_argument("integrate_1d: need at least 16 points");
  if (!(hi > lo)) throw std::invalid_argument("integrate_1d: empty interval");
  const std::vector<double> x = linspace(lo, hi, n);
  const double h = (hi - lo) / (n - 1);
  std::vector<double> terms(n);
  for (int i = 0; i < n; ++i) {
    const double v = f(x[i]);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "integrate_1d: non-finite integrand " << v << " at x=" << x[i];
      throw NumericalError(msg.str());
    }
    terms[i] = (i == 0 || i == n - 1 ? 0.5 * h : h) * v;
  }
  return pairwise_sum<double>(terms);
}

}  // namespace dwl::numerics

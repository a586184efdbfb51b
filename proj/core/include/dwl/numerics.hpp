#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace dwl {

/// A phase-space point: s is the dimensionless orbit coordinate, k the
/// momentum k_x in units of sqrt(eB).
struct PhasePoint {
  double s = 0.0;
  double k = 0.0;
};

}  // namespace dwl

namespace dwl::numerics {

enum class QuadratureRule { Trapezoid, GaussHermite };

/// Tensor-product quadrature on the (s, k) plane. Integrals computed on it
/// are  sum_ij ws_i wk_j f(s_i, k_j)  ~  \iint ds dk f.
class QuadratureGrid {
 public:
  /// Uniform trapezoid rule; n_s, n_k >= 16 and non-empty intervals.
  static QuadratureGrid trapezoid(double s_min, double s_max, int n_s,
                                  double k_min, double k_max, int n_k);
  /// Gauss-Hermite nodes with weights rescaled to integrate f directly
  /// (w_i e^{x_i^2}). Limited to 16..200 nodes per axis.
  static QuadratureGrid gauss_hermite(int n_s, int n_k);

  QuadratureRule rule() const { return rule_; }
  int n_s() const { return static_cast<int>(s_.size()); }
  int n_k() const { return static_cast<int>(k_.size()); }
  double s_min() const { return s_.front(); }
  double s_max() const { return s_.back(); }
  double k_min() const { return k_.front(); }
  double k_max() const { return k_.back(); }

  std::span<const double> s_nodes() const { return s_; }
  std::span<const double> k_nodes() const { return k_; }
  std::span<const double> s_weights() const { return ws_; }
  std::span<const double> k_weights() const { return wk_; }

  /// Same extent, spacing halved (trapezoid: 2n-1 nested nodes) or node
  /// count doubled (Gauss-Hermite).
  QuadratureGrid refined() const;

 private:
  QuadratureGrid() = default;
  QuadratureRule rule_ = QuadratureRule::Trapezoid;
  std::vector<double> s_, ws_, k_, wk_;
};

/// Classical turning point of level n_max plus a Gaussian tail margin.
double default_half_width(int n_max, double pad = 6.0);

/// Square trapezoid grid [-L, L]^2 with L = sqrt(2(2 n_max + 1)) + pad.
QuadratureGrid default_grid(int n_max, double pad = 6.0, int points = 512);

/// Cascade summation with a fixed reduction tree; the result depends only
/// on the order of the input.
template <class T>
T pairwise_sum(std::span<const T> v) {
  constexpr std::size_t kBlock = 16;
  if (v.size() <= kBlock) {
    T acc{};
    for (const T& x : v) acc += x;
    return acc;
  }
  const std::size_t half = v.size() / 2;
  T left = pairwise_sum(v.first(half));
  left += pairwise_sum(v.subspan(half));
  return left;
}

/// Worker count: DWL_THREADS if set and positive, else hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, n) on worker_count() threads. Work items are
/// claimed dynamically, so body must write only to slot i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Integrates a T-valued integrand over the grid. Each s-row is summed
/// pairwise in k, rows are summed pairwise in s: bit-identical for any
/// thread count.
template <class T, class F>
T integrate_grid(const QuadratureGrid& grid, F&& f) {
  const auto s = grid.s_nodes();
  const auto k = grid.k_nodes();
  const auto ws = grid.s_weights();
  const auto wk = grid.k_weights();
  std::vector<T> rows(s.size());
  parallel_for(s.size(), [&](std::size_t i) {
    std::vector<T> terms(k.size());
    for (std::size_t j = 0; j < k.size(); ++j) {
      T v = f(PhasePoint{s[i], k[j]});
      v *= wk[j];
      terms[j] = v;
    }
    T row = pairwise_sum<T>(terms);
    row *= ws[i];
    rows[i] = row;
  });
  return pairwise_sum<T>(rows);
}

/// \iint ds dk f on the grid. Throws NumericalError naming the first
/// non-finite sample.
double integrate_2d(const std::function<double(PhasePoint)>& f, const QuadratureGrid& grid);

struct ResolutionCheck {
  double value = 0.0;    // on the given grid
  double refined = 0.0;  // on grid.refined()
  double residual() const;
};

ResolutionCheck integrate_2d_checked(const std::function<double(PhasePoint)>& f,
                                     const QuadratureGrid& grid);

/// Trapezoid on [lo, hi] with n >= 16 points, pairwise summation.
double integrate_1d(const std::function<double(double)>& f, double lo, double hi, int n);

/// A uniform 1-D trapezoid grid.
struct LineGrid {
  double lo = -12.0;
  double hi = 12.0;
  int points = 512;

  /// Same interval, spacing halved.
  LineGrid refined() const { return {lo, hi, 2 * points - 1}; }
};

/// Trapezoid nodes on [lo, hi].
std::vector<double> linspace(double lo, double hi, int n);

}  // namespace dwl::numerics

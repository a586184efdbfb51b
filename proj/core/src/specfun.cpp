#include "dwl/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dwl::specfun {

namespace {

void require_order(int n, const char* what) {
  if (n < 0) {
    throw std::invalid_argument(std::string(what) + ": negative order " + std::to_string(n));
  }
}

}  // namespace

double hermite_poly(int n, double s) {
  require_order(n, "hermite_poly");
  double h_prev = 1.0;
  if (n == 0) return h_prev;
  double h = 2.0 * s;
  for (int k = 1; k < n; ++k) {
    const double h_next = 2.0 * s * h - 2.0 * k * h_prev;
    h_prev = h;
    h = h_next;
  }
  return h;
}

void hermite_fn_sequence(double s, std::span<double> out) {
  if (out.empty()) return;
  // pi^{-1/4} exp(-s^2/2)
  const double f0 = std::exp(-0.5 * s * s) / std::sqrt(std::sqrt(std::numbers::pi));
  out[0] = f0;
  if (out.size() == 1) return;
  out[1] = std::numbers::sqrt2 * s * f0;
  // sqrt(2(k+1)) F_{k+1} = 2 s F_k - sqrt(2k) F_{k-1}
  for (std::size_t k = 1; k + 1 < out.size(); ++k) {
    const double kd = static_cast<double>(k);
    out[k + 1] = (2.0 * s * out[k] - std::sqrt(2.0 * kd) * out[k - 1]) / std::sqrt(2.0 * (kd + 1.0));
  }
}

double hermite_fn(int n, double s, double eB) {
  if (!(eB > 0.0)) throw std::invalid_argument("hermite_fn: eB must be positive");
  if (n < -1) throw std::invalid_argument("hermite_fn: order below -1");
  if (n == -1) return 0.0;
  const double scale = std::sqrt(std::sqrt(eB));
  const double f0 = std::exp(-0.5 * s * s) / std::sqrt(std::sqrt(std::numbers::pi));
  if (n == 0) return scale * f0;
  double prev = f0;
  double cur = std::numbers::sqrt2 * s * f0;
  for (int k = 1; k < n; ++k) {
    const double next = (2.0 * s * cur - std::sqrt(2.0 * k) * prev) / std::sqrt(2.0 * (k + 1));
    prev = cur;
    cur = next;
  }
  return scale * cur;
}

LaguerreTriple laguerre_triple(int n, double t) {
  require_order(n, "laguerre");
  LaguerreTriple r;
  double l_prev = 0.0;
  double l = 1.0;
  double deriv = 0.0;
  for (int k = 0; k < n; ++k) {
    deriv -= l;
    // (k+1) L_{k+1} = (2k+1-t) L_k - k L_{k-1}
    const double l_next = ((2.0 * k + 1.0 - t) * l - k * l_prev) / (k + 1.0);
    l_prev = l;
    l = l_next;
  }
  r.prev = l_prev;
  r.value = l;
  r.deriv = deriv;
  return r;
}

double laguerre(int n, double t) { return laguerre_triple(n, t).value; }

double laguerre_deriv(int n, double t) { return laguerre_triple(n, t).deriv; }

}  // namespace dwl::specfun

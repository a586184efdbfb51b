#pragma once

#include <span>

namespace dwl::specfun {

/// Physicists' Hermite polynomial H_n(s) by the three-term recurrence.
double hermite_poly(int n, double s);

/// Oscillator eigenfunction
///   F_n(s) = (sqrt(eB) / (n! 2^n sqrt(pi)))^{1/2} exp(-s^2/2) H_n(s),
/// normalised so that  int F_n F_m ds = sqrt(eB) delta_nm.
/// F_{-1} is identically zero. Evaluated through the normalised recurrence
/// on F_n / eB^{1/4}; no factorials are formed, so n in the hundreds is safe.
double hermite_fn(int n, double s, double eB);

/// Fills out[k] = F_k(s) / eB^{1/4} for k = 0..out.size()-1.
void hermite_fn_sequence(double s, std::span<double> out);

/// Laguerre polynomial L_n(t).
double laguerre(int n, double t);

/// dL_n/dt, computed as -sum_{k<n} L_k(t).
double laguerre_deriv(int n, double t);

struct LaguerreTriple {
  double prev = 0.0;   // L_{n-1}(t), zero for n = 0
  double value = 0.0;  // L_n(t)
  double deriv = 0.0;  // L_n'(t)
};

/// L_{n-1}, L_n and L_n' from a single recurrence pass.
LaguerreTriple laguerre_triple(int n, double t);

}  // namespace dwl::specfun

#pragma once

// ============================================================================
// Riemann zeta on a finite window, the alternating (eta) factor, the
// weight |1 - 2^{1-s}|^2, and the functional-equation factor
// chi(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s).
//
// zeta uses Euler-Maclaurin with cutoff N = max(20, ceil(1.3|t|)) and
// Bernoulli corrections through B30; supported window Re s >= -1,
// |Im s| <= 1e5, accuracy ~1e-12 relative across the window.
// ============================================================================

#include <vector>

#include "zetaverify/types.hpp"

namespace zv {

// Supported evaluation window for zeta/eta.
inline constexpr double kZetaMinSigma = -1.0;
inline constexpr double kZetaMaxAbsT = 1e5;

// zeta(s).  Throws PoleAtOne at s = 1 exactly and UnsupportedRegion outside
// the window above.  Pure function: no hidden caching.
Complex zeta(const Complex& s, const EvalSettings& settings = {});

// (1 - 2^{1-s}) * zeta(s), the entire alternating-series factor.
// At s = 1 returns log 2 (the limit value, since (s-1)zeta(s) -> 1).
Complex eta(const Complex& s, const EvalSettings& settings = {});

// |1 - 2^{1-sigma-it}|^2 = 1 - 2^{2-sigma} cos(t log 2) + 2^{2-2sigma},
// clamped to be >= 0 against rounding.  At sigma = 1/2 this is the weight
// 3 - sqrt(8) cos(t log 2).
double eta_weight_sq(double sigma, double t);

// chi(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s), so zeta(s) = chi(s) zeta(1-s).
// Throws ChiPole for s in {1, 2, 3, ...} (poles of Gamma(1-s); the sin
// cancellations at even integers are not exploited) and UnsupportedRegion
// for |Im s| > 400 where sin/Gamma factors overflow/underflow separately.
Complex chi_factor(const Complex& s);

// zeta'(0) = -log(2 pi)/2, stored closed form.
double zeta_derivative_at_zero();

// A = -zeta'(0) - log 2 = log(pi/2)/2, the constant in the asymptotic
// phi(x) = (1/4) log x + A + O(x^{eps - 1/4}).
double constant_A();

// Mean square of the alternating factor along Re s = sigma:
//   M(sigma) = (1 - 2^{1-2 sigma}) zeta(2 sigma),  M(1/2) = log 2 (limit).
// This is the constant in the mean-value identities and tail models.
double eta_mean_square_constant(double sigma);

// ----------------------------------------------------------------------------
// Evaluates zeta/eta along one fixed vertical line Re s = sigma for
// |t| <= t_cap, sharing the n^{-sigma} and log n tables across calls.
// Results are bit-identical to the free functions; the tables are immutable
// after construction, so const use is thread-safe.
// ----------------------------------------------------------------------------
class ZetaLineEvaluator {
 public:
  ZetaLineEvaluator(double sigma, double t_cap, EvalSettings settings = {});

  Complex zeta_at(double t) const;  // zeta(sigma + it)
  Complex eta_at(double t) const;   // (1 - 2^{1-s}) zeta(s) at s = sigma + it

  double sigma() const { return sigma_; }
  double t_cap() const { return t_cap_; }

 private:
  double sigma_;
  double t_cap_;
  EvalSettings settings_;
  std::vector<double> inv_pow_;  // inv_pow_[k] = (k+1)^{-sigma}
  std::vector<double> log_n_;    // log_n_[k]   = log(k+1)
};

}  // namespace zv

#pragma once

// ============================================================================
// Adaptive Gauss-Kronrod (G7,K15) quadrature over finite and semi-infinite
// intervals, vertical-line integrals in the complex plane, and an
// alternating-series accelerator for oscillatory tails.
//
// All panel recursion is depth-first left-to-right with compensated
// accumulation, so results are deterministic for a deterministic integrand.
// ============================================================================

#include <concepts>
#include <functional>
#include <limits>
#include <type_traits>
#include <vector>

#include "zetaverify/types.hpp"

namespace zv {

struct IntegrateOptions {
  double tol = 1e-10;  // absolute tolerance for the whole requested integral
  // Upper bound on the width of initial panels; keep at or below ~1 for
  // zeta-weighted integrands so oscillations are resolved before adapting.
  double max_panel_width = std::numeric_limits<double>::infinity();
  long max_evaluations = 1'000'000;  // integrand-evaluation budget
  int max_depth = 60;                // bisection depth per initial panel
};

struct QuadratureOutcome {
  Complex value{0.0, 0.0};      // imaginary part stays 0 for real integrands
  double error_estimate = 0.0;  // sum of accepted per-panel error estimates
  double tail_bound = 0.0;      // bound on what truncation may have dropped
  long evaluations = 0;

  double real() const { return value.real(); }
};

// ----------------------------------------------------------------------------
// Tail models for integrate_semi_infinite.  The model picks the truncation
// point X, supplies a closed-form estimate of the dropped tail that is
// *added into the value*, and reports a bound on the residual in tail_bound.
// ----------------------------------------------------------------------------
struct TailModel {
  enum class Kind { none, inverse_power, eta_mean_square, phi_square_closed_form };
  Kind kind = Kind::none;
  std::vector<double> parameters;

  // No model: panels are extended geometrically until two consecutive
  // extension panels contribute less than tol/8 each; tail_bound is a
  // geometric-decay heuristic from the last panel.
  static TailModel none();

  // |f(x)| ~ C x^{-p} with p = exponent > 1; C is estimated by sampling
  // near the cut.  The model tail C X^{1-p}/(p-1) is added to the value;
  // X is pushed until the *drift* of the estimated C (the model-mismatch
  // residual) is below tol/2.
  static TailModel inverse_power(double exponent);

  // Integrand behaves on average like M(sigma)/t^2 with
  // M(sigma) = (1 - 2^{1-2 sigma}) zeta(2 sigma) (mean square of the
  // alternating factor).  Adds M/X to the value; tail_bound = 3 M/X.
  static TailModel eta_mean_square(double sigma);

  // Integrand is phi(x)^2 x^{-2}-like: beyond X the asymptote
  // ((1/4) log x + A)^2 x^{-2} integrates in closed form and is added to
  // the value; tail_bound covers the remainder-envelope residual
  // |phi_1(x)| <= K x^{-1/4} with the recorded K = 0.5.
  static TailModel phi_square_closed_form();
};

// Adaptive integral of f over [a, b] (a <= b).  Throws NoConvergence if the
// evaluation budget is exhausted or the accumulated error estimate still
// exceeds tol afterwards.
QuadratureOutcome integrate_finite(const std::function<double(double)>& f,
                                   double a, double b,
                                   const IntegrateOptions& options = {});
QuadratureOutcome integrate_finite(const std::function<Complex(double)>& f,
                                   double a, double b,
                                   const IntegrateOptions& options = {});

// Dispatch for raw callables (lambdas, function pointers): picks the real or
// complex overload from the callable's return type, so a double-returning
// lambda is not ambiguous between the two std::function conversions above.
template <class F>
  requires(std::invocable<F&, double> &&
           !std::same_as<std::remove_cvref_t<F>, std::function<double(double)>> &&
           !std::same_as<std::remove_cvref_t<F>, std::function<Complex(double)>>)
QuadratureOutcome integrate_finite(F&& f, double a, double b,
                                   const IntegrateOptions& options = {}) {
  using R = std::remove_cvref_t<std::invoke_result_t<F&, double>>;
  if constexpr (std::same_as<R, Complex>) {
    return integrate_finite(std::function<Complex(double)>(std::forward<F>(f)),
                            a, b, options);
  } else {
    static_assert(std::is_convertible_v<R, double>,
                  "integrand must return double or Complex");
    return integrate_finite(std::function<double(double)>(std::forward<F>(f)),
                            a, b, options);
  }
}

// Integral of f over [a, infinity), truncated at a model-chosen X <= 1e8
// (1e12 for the model-free variant's geometric extension).  The model's
// closed-form tail estimate is added to the value and its residual bound is
// reported in tail_bound.  Throws TailModelUnusable if the model cannot
// reach its target within the truncation cap.
QuadratureOutcome integrate_semi_infinite(
    const std::function<double(double)>& f, double a, const TailModel& tail,
    const IntegrateOptions& options = {});

// (1/2 pi) * Integral_{-T}^{T} F(sigma + it) dt — the vertical-line integral
// with the 1/(2 pi i) ds convention folded in (ds = i dt).
QuadratureOutcome integrate_vertical_line(
    const std::function<Complex(const Complex&)>& F, double sigma, double T,
    const IntegrateOptions& options = {});

// Sum of the alternating series  sum_{k>=0} (-1)^k a_k  for positive,
// eventually-monotone a_k, via Cohen–Rodriguez Villegas–Zagier acceleration
// using n_terms evaluations; error ~ (3+sqrt 8)^{-n_terms} * sum scale.
double alternating_series_sum(const std::function<double(long)>& term,
                              int n_terms = 36);

// Full-line Lorentzian-cosine integral
//   Integral_{-infinity}^{infinity} cos(alpha x) / (sigma^2 + x^2) dx
//     = (pi/sigma) e^{-|alpha| sigma},
// computed numerically (finite head + alternating half-period tail summed
// with the accelerator; pure geometric extension when alpha = 0).  The
// closed form is the test oracle, not part of the computation.
QuadratureOutcome cosine_lorentzian_integral(double alpha, double sigma,
                                             double tol);

}  // namespace zv

#pragma once

// ============================================================================
// Modified Mellin transform machinery on [1, infinity):
//
//   m[f](s) = Integral_1^infty f(x) x^{-s-1} dx .
//
// Contents:
//  * a generic quadrature transform for arbitrary integrands,
//  * closed-form / pair-sum transforms of the odd-interval indicator,
//  * an exact piecewise transform of the convolution phi (each (m, n)
//    piece's contribution is linear in log x between integer breakpoints,
//    so the window integral has a closed form per piece),
//  * the weighted square integral of phi by an event sweep,
//  * vertical-line Mellin inversion of phi,
//  * the Parseval pairing and the finite-interval square-convolution
//    identity, both returned as IdentityReports.
// ============================================================================

#include <functional>

#include "zetaverify/quadrature.hpp"
#include "zetaverify/report.hpp"
#include "zetaverify/types.hpp"

namespace zv {

struct MellinFunction {
  std::function<double(double)> evaluator;  // total on x >= 1
  // alpha such that |f(x)| is O(x^alpha log x); the transform converges for
  // Re s > alpha and the truncation logic keys off this.
  double growth_hint = 0.0;
  // Optional closed form of m[f]; used by parseval_pair's line side when
  // present (otherwise the transform is computed numerically per node).
  std::function<Complex(const Complex&)> transform;
};

// Generic numeric transform: geometric segment extension until two
// consecutive segments are below tol/8 in modulus (truncation cap 1e8).
// Throws DivergentTransform if Re s <= growth_hint, NoConvergence if the
// integrand has not decayed by the cap.
Complex modified_mellin(const MellinFunction& f, const Complex& s,
                        double tol = 1e-8);

// m[g](s) = (1 - 2^{1-s}) zeta(s) / s for the odd-interval indicator g;
// value at s = 1 is log 2 (limit).  Throws DivergentTransform if Re s <= 0
// (the transform integral itself diverges there).
Complex mellin_of_indicator_closed_form(const Complex& s);

// Pair-sum transform of the indicator truncated at X_eff = 2 floor(x_max/2):
//   sum_n ((2n-1)^{-s} - (2n)^{-s}) / s  +  X_eff^{-s} / (2s),
// the final term being the mean of the alternating pair tail.  tail_bound
// reports the residual envelope ~ (|s|+1) X^{-sigma-1} / (sigma+1).
QuadratureOutcome mellin_of_indicator_numeric(const Complex& s, double x_max);

// Exact piecewise window integral int_1^X phi(x) x^{-s-1} dx plus the
// closed-form asymptote tail int_X^inf ((1/4) log x + A) x^{-s-1} dx;
// requires Re s > 0.  tail_bound covers the remaining remainder tail
// |int_X^inf phi_1 x^{-s-1} dx| <= K X^{-sigma-1/4}/(sigma+1/4), K = 0.5.
QuadratureOutcome mellin_of_phi_numeric(const Complex& s, double x_max);

// m[phi_1](s) over the window [1, X]: the exact phi window integral minus
// the closed form of int_1^X ((1/4) log x + A) x^{-s-1} dx.  Valid for
// Re s > -1/4 (the remainder transform's convergence region); the unadded
// tail is bounded as above and reported in tail_bound.
QuadratureOutcome mellin_of_phi_remainder_numeric(const Complex& s,
                                                  double x_max);

// Integral_1^X phi(x)^2 x^{-2} dx, exactly, by sweeping the integer
// breakpoints where the piecewise form of phi changes (phi is alpha + beta
// log x between breakpoints, so each segment integrates in closed form).
double phi_square_weighted_integral(double x_max);

// Closed form of int_X^inf ((1/4) log x + A)^2 x^{-2} dx and the envelope
// bound on |int_X^inf (phi^2 - asymptote^2) x^{-2} dx|; shared by the
// quartic-moment check and the semi-infinite tail model.
double phi_square_tail_closed_form(double x_cut);
double phi_square_tail_residual_bound(double x_cut);

// Mellin inversion of phi along Re s = c, truncated at |Im s| = T:
//   (1/2 pi) Integral_{-T}^{T} (1-2^{1-s})^2 zeta(s)^2 x^s s^{-2} dt .
// Converges to phi_exact(x) as T grows.  tol is the quadrature budget; the
// oscillatory truncation tail is not modeled.
double inverse_mellin_phi(double x, double c, double T, double tol = 1e-4);

// Parseval pairing: compares
//   lhs = Integral_1^infinity f g x^{-1-2 sigma} dx        (x side)
//   rhs = (1/2 pi) Integral_{-T}^{T} F*(s) conj(G*(s)) dt  (line side)
// with a sampled 1/t^2 mean-law correction for the line tail beyond T.
// f and g must be real-valued; tol is the report tolerance and both sides
// are computed to roughly tol/4 absolute.
IdentityReport parseval_pair(const MellinFunction& f, const MellinFunction& g,
                             double sigma, double T, double tol);

// Square-convolution identity on a finite interval 0 < a < b:
//   (Integral_a^b f x^{-s} dx)^2
//     = Integral_{a^2}^{ab} x^{-s} Integral_a^{x/a}   f(u) f(x/u) du/u dx
//     + Integral_{ab}^{b^2} x^{-s} Integral_{x/b}^{b} f(u) f(x/u) du/u dx.
// lhs is the direct square, rhs the nested two-piece quadrature with inner
// tolerance = outer / (10 (b^2 - a^2)).
IdentityReport mellin_square_convolution(const std::function<double(double)>& f,
                                         double a, double b, const Complex& s,
                                         double tol = 1e-6);

}  // namespace zv

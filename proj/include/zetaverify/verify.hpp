#pragma once

// ============================================================================
// The identity checks.  Each evaluates both sides of one mean-value or
// transform identity for the alternating zeta factor and reports the
// agreement as an IdentityReport:
//
//   eta-line          full-line weighted second moment = (pi/sigma) M(sigma)
//   critical-line     the sigma = 1/2 moment against pi log 2
//   phi-mellin        s^2 m[phi](s) = eta(s)^2
//   fourth-moment     weighted quartic moment = pi Integral phi^2 x^{-2} dx
//   decay             remainder decay exponent against -1/4
//   remainder-mellin  A s + 1/4 + s^2 m[phi_1](s) = eta(s)^2
//
// plus cross-checks of the supporting machinery (lorentzian, indicator-
// mellin, convolution, parseval, inversion), all runnable from one registry.
// ============================================================================

#include <optional>
#include <string>
#include <vector>

#include "zetaverify/report.hpp"
#include "zetaverify/types.hpp"

namespace zv {

// Default tolerance classes by comparison kind.
inline constexpr double kTolClosedForm = 1e-10;   // closed form vs closed form
inline constexpr double kTolQuadVsClosed = 1e-3;  // quadrature vs closed form
inline constexpr double kTolCriticalLine = 5e-3;  // critical-line moment
inline constexpr double kTolQuadVsQuad = 1e-2;    // quadrature vs quadrature

// Full-line second moment, sigma > 0:
//   Integral_{-inf}^{inf} |eta(sigma+it)|^2 / (sigma^2+t^2) dt
//     = (pi/sigma) M(sigma)              (2 pi log 2 in the sigma = 1/2 limit).
// Folded onto [0, T] (even integrand) and completed with the mean-law tail
// M(sigma) (pi/2 - atan(T/sigma)) / sigma.
IdentityReport eta_line_mean_value(double sigma, double T = 1e4,
                        double tol = kTolQuadVsClosed);

// The sigma = 1/2 half-line moment against pi log 2.
IdentityReport critical_line_mean_value(double T = 5000.0, double tol = kTolCriticalLine);

// s^2 m[phi](s) = eta(s)^2 for Re s > 0.
IdentityReport phi_transform_identity(const Complex& s, double x_max = 1e6,
                        double tol = kTolQuadVsClosed);

// Weighted quartic moment on the half line against the exact sweep:
//   Integral_0^inf |eta(1/2+it)|^4 / (1/4+t^2)^2 dt
//     = pi Integral_1^inf phi(x)^2 x^{-2} dx.
IdentityReport fourth_moment_identity(double T = 500.0, double x_max = 1e5,
                          double tol = kTolQuadVsQuad);

// Least-squares decay exponent: slope of log |phi_1| against log x on a
// geometric grid (default: 50 points spanning [1e2, 1e6]), judged against
// -1/4 with tolerance 0.2.  Points with |phi_1| < 1e-6 are excluded as
// near-zero crossings; fewer than 5 usable points throws InsufficientData.
// The recorded envelope max |phi_1(x)| x^{0.2} is included in params.
IdentityReport remainder_decay_fit(const std::vector<double>& x_grid = {});

// A s + 1/4 + s^2 m[phi_1](s) = eta(s)^2 for Re s > -1/4.
IdentityReport phi1_identity(const Complex& s, double x_max = 1e6,
                             double tol = kTolQuadVsQuad);

// ----------------------------------------------------------------------------
// Check registry
// ----------------------------------------------------------------------------
struct CheckOverrides {
  std::optional<double> sigma;
  std::optional<Complex> s;
  std::optional<double> t_max;
  std::optional<double> x_max;
  std::optional<double> tol;
};

// All registered check names, alphabetical.
const std::vector<std::string>& all_check_names();

// Runs one named check; returns one report per parameter point (suite-style
// checks return a single worst-case report).  Throws DomainError for an
// unknown name.
std::vector<IdentityReport> run_check(const std::string& name,
                                      const CheckOverrides& overrides = {});

// Every check in registry order.
std::vector<IdentityReport> run_all(const CheckOverrides& overrides = {});

}  // namespace zv

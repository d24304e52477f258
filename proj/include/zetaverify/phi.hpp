#pragma once

// ============================================================================
// Multiplicative self-convolution of the odd-interval indicator
//
//   g(u) = 1  iff  floor(u) is odd          (u in [2n-1, 2n) for some n >= 1)
//   phi(x) = Integral_1^x g(u) g(x/u) du/u .
//
// The integrand is 1 exactly on a finite union of intervals: for integers
// m, n >= 1 the factor g(u) needs u in [2n-1, 2n] and g(x/u) needs
// x/u in [2m-1, 2m], so u lies in
//
//   I(m, n, x) = [ max(2n-1, x/(2m)), min(2n, x/(2m-1)) ],
//
// which has positive length iff (2m-1)(2n-1) < x < 4mn.  phi(x) is the sum
// of log(upper/lower) over all such pieces.  Endpoints are measure zero
// under du/u, so open/closed status is ignored.
//
// For large x,  phi(x) = (1/4) log x + A + O(x^{eps - 1/4})  with
// A = (1/2) log(pi/2); the remainder phi_1 = phi - (1/4) log x - A is what
// extends the transform identities left of the convergence line.
// ============================================================================

#include <vector>

#include "zetaverify/types.hpp"

namespace zv {

// Enumeration cost is O(x) and binary64 log accuracy is the other limit;
// everything downstream needs at most 1e6.
inline constexpr double kMaxPhiArgument = 1e8;

// 1 iff floor(x) is odd, else 0 (half-open convention: 1 on [1,2), 0 at 2).
// Any x < 1 (including negatives) is outside every odd interval.
int indicator_g(double x);

struct IntervalPiece {
  long long m = 0;
  long long n = 0;
  double lower = 0.0;
  double upper = 0.0;
  double contribution = 0.0;  // log(upper / lower)
};

// Every positive-length piece of the convolution integrand at this x,
// sorted by (n, m).  Materializes the whole list (~0.35 x entries); use
// phi_exact for plain evaluation, which streams the same enumeration.
// Throws DomainError unless 1 <= x <= kMaxPhiArgument.
std::vector<IntervalPiece> phi_pieces(double x);

// Sum of piece contributions = the convolution integral, accumulated with
// compensated summation in (n, m) order (deterministic).
// Throws DomainError unless 1 <= x <= kMaxPhiArgument.
double phi_exact(double x);

// Two-term large-x form (1/4) log x + A.  Pure formula, no domain check.
double phi_asymptotic(double x);

// phi_exact(x) - phi_asymptotic(x); same domain as phi_exact.
double phi_remainder(double x);

struct PhiEvaluation {
  double x = 0.0;
  double exact = 0.0;  // equals asymptotic + remainder bitwise, see below
  double asymptotic = 0.0;
  double remainder = 0.0;
};

// Bundles all three evaluations.  `exact` is reconstructed as
// asymptotic + remainder so that identity holds bitwise; this can differ
// from phi_exact(x) by one rounding when phi is tiny relative to A.
PhiEvaluation phi_evaluate(double x);

}  // namespace zv

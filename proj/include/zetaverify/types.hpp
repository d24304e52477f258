#pragma once

// ============================================================================
// Shared scalar types, error taxonomy, and evaluation settings.
//
// Everything in this library is binary64; complex values use std::complex.
// Each failure mode callers are expected to distinguish gets its own
// exception type so tests and the CLI can react precisely.
// ============================================================================

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace zv {

using Complex = std::complex<double>;

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// ----------------------------------------------------------------------------
// Error taxonomy
// ----------------------------------------------------------------------------
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// zeta has a simple pole at s = 1; evaluation exactly there is refused.
struct PoleAtOne : Error {
  PoleAtOne() : Error("zeta(s) has a pole at s = 1") {}
};

// Argument lies outside the supported evaluation window of a routine.
struct UnsupportedRegion : Error {
  explicit UnsupportedRegion(const std::string& what) : Error(what) {}
};

// chi(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) cannot be evaluated at
// s = 1, 2, 3, ... where Gamma(1-s) has poles (cancellations not exploited).
struct ChiPole : Error {
  explicit ChiPole(const std::string& what) : Error(what) {}
};

// Precondition violation on a real-argument domain (e.g. phi(x) with x < 1).
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Quadrature could not reach the requested tolerance within its budget.
struct NoConvergence : Error {
  explicit NoConvergence(const std::string& what) : Error(what) {}
};

// A tail model cannot push the modeled truncation error below the target
// within its supported truncation range.
struct TailModelUnusable : Error {
  explicit TailModelUnusable(const std::string& what) : Error(what) {}
};

// A transform integral does not converge for the requested parameter
// (e.g. modified Mellin transform at Re s <= growth bound).
struct DivergentTransform : Error {
  explicit DivergentTransform(const std::string& what) : Error(what) {}
};

// A data-driven estimate (least-squares fit) has too few usable points.
struct InsufficientData : Error {
  explicit InsufficientData(const std::string& what) : Error(what) {}
};

// ----------------------------------------------------------------------------
// Series evaluation settings
// ----------------------------------------------------------------------------
struct EvalSettings {
  // Requested relative accuracy. Requests below 2^-50 are clamped to 2^-50
  // (the practical binary64 floor for these series).
  double target_rel_error = 1e-12;
  // Hard cap on the number of series terms a single evaluation may use.
  long max_terms = 2'000'000;

  // Returns a copy with invariants enforced; throws DomainError on nonsense.
  EvalSettings validated() const {
    if (!(target_rel_error > 0.0) || !(target_rel_error < 1.0))
      throw DomainError("EvalSettings: target_rel_error must lie in (0, 1)");
    if (max_terms <= 0)
      throw DomainError("EvalSettings: max_terms must be positive");
    EvalSettings v = *this;
    const double floor_rel = 0x1p-50;
    if (v.target_rel_error < floor_rel) v.target_rel_error = floor_rel;
    return v;
  }
};

// ----------------------------------------------------------------------------
// Compensated (Kahan) accumulators; used for every series and panel sum so
// results are deterministic and rounding stays near one ulp of the total.
// ----------------------------------------------------------------------------
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

struct KahanComplexSum {
  KahanSum re, im;
  void add(const Complex& z) {
    re.add(z.real());
    im.add(z.imag());
  }
  Complex value() const { return {re.value(), im.value()}; }
};

}  // namespace zv

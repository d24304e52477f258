// ============================================================================
// Piece enumeration for the odd-interval convolution phi(x).
//
// For fixed n, the m with nonempty I(m, n, x) form one contiguous run:
// the constraints are x/(4n) < m (so the piece starts below 2n) and
// (2m-1)(2n-1) < x (so it starts before the u-window ends).  The loop
// scans a slightly padded window and keeps only pieces passing the exact
// inequalities, so boundary rounding can only drop zero-length pieces.
// ============================================================================

#include "zetaverify/phi.hpp"

#include <algorithm>
#include <cmath>

#include "zetaverify/zeta.hpp"

namespace zv {

namespace {

void check_phi_domain(double x) {
  if (!is_finite(x) || x < 1.0)
    throw DomainError("phi: argument must satisfy x >= 1");
  if (x > kMaxPhiArgument)
    throw DomainError("phi: argument exceeds the supported maximum of 1e8");
}

// Calls fn(m, n, lower, upper) for every positive-length piece, in (n, m)
// order.  All comparisons use the same binary64 quantities the piece
// endpoints are built from, so emitted pieces always satisfy lower < upper.
template <class Fn>
void for_each_phi_piece(double x, Fn&& fn) {
  for (long long n = 1; 2.0 * static_cast<double>(n) - 1.0 < x; ++n) {
    const double u_lo = 2.0 * static_cast<double>(n) - 1.0;
    const double u_hi = u_lo + 1.0;
    long long m = static_cast<long long>(std::floor(x / (4.0 * static_cast<double>(n))));
    if (m < 1) m = 1;
    for (;; ++m) {
      const double md = static_cast<double>(m);
      if ((2.0 * md - 1.0) * u_lo >= x) break;  // run is over for this n
      if (4.0 * md * static_cast<double>(n) <= x) continue;  // not started yet
      const double lower = std::max(u_lo, x / (2.0 * md));
      const double upper = std::min(u_hi, x / (2.0 * md - 1.0));
      if (!(lower < upper)) continue;  // rounding-degenerate sliver
      fn(m, n, lower, upper);
    }
  }
}

}  // namespace

int indicator_g(double x) {
  if (!(x >= 1.0)) return 0;  // also rejects NaN
  return static_cast<long long>(x) % 2 == 1 ? 1 : 0;
}

std::vector<IntervalPiece> phi_pieces(double x) {
  check_phi_domain(x);
  std::vector<IntervalPiece> pieces;
  for_each_phi_piece(x, [&](long long m, long long n, double lo, double hi) {
    pieces.push_back({m, n, lo, hi, std::log(hi / lo)});
  });
  return pieces;
}

double phi_exact(double x) {
  check_phi_domain(x);
  KahanSum total;
  for_each_phi_piece(x, [&](long long, long long, double lo, double hi) {
    total.add(std::log(hi / lo));
  });
  return total.value();
}

double phi_asymptotic(double x) { return 0.25 * std::log(x) + constant_A(); }

double phi_remainder(double x) { return phi_exact(x) - phi_asymptotic(x); }

PhiEvaluation phi_evaluate(double x) {
  PhiEvaluation out;
  out.x = x;
  out.asymptotic = phi_asymptotic(x);
  out.remainder = phi_exact(x) - out.asymptotic;
  // Reconstructed so exact == asymptotic + remainder holds bitwise.
  out.exact = out.asymptotic + out.remainder;
  return out;
}

}  // namespace zv

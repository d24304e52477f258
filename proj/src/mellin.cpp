// ============================================================================
// Modified Mellin transforms m[f](s) = Integral_1^inf f(x) x^{-s-1} dx.
//
// The transform of phi is computed *exactly* over a finite window: between
// integer breakpoints each convolution piece contributes a function that is
// linear in log x, and  Integral x^{-s-1} dx  and  Integral log(x) x^{-s-1} dx
// have closed forms.  Per pair (m, n) with P1 = (2m-1)(2n-1) < X the piece
// length log(upper/lower) equals
//
//     log x - log P1                 on [P1, min(Pa, Pb)]
//     log(2q/(2q-1)), q = max(m, n)  on [min(Pa, Pb), max(Pa, Pb)]
//     log(4mn) - log x               on [max(Pa, Pb), 4mn]
//
// with Pa = 2n(2m-1), Pb = 2m(2n-1).  Summing the per-segment closed forms
// over all pairs gives the window integral with rounding as the only error.
// The same breakpoint data drives the event sweep for the weighted square
// integral of phi: between events phi(x) = alpha + beta log x, and
// Integral (alpha + beta log x)^2 x^{-2} dx is closed-form per segment.
// ============================================================================

#include "zetaverify/mellin.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <vector>

#include "zetaverify/phi.hpp"
#include "zetaverify/zeta.hpp"

namespace zv {
namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// ----------------------------------------------------------------------------
// Closed-form primitives.  A breakpoint carries (log x, x^{-s}) so the
// complex exponential is computed once per breakpoint:
//   primitive_const(a, b) = Integral_a^b x^{-s-1} dx
//                         = (a^{-s} - b^{-s}) / s          (log(b/a) at s = 0)
//   primitive_log(a, b)   = Integral_a^b log(x) x^{-s-1} dx
//                         = (a^{-s}(s log a + 1) - b^{-s}(s log b + 1)) / s^2
//                           ((log^2 b - log^2 a)/2 at s = 0)
// ----------------------------------------------------------------------------
struct Bound {
  double lx;   // log x
  Complex px;  // x^{-s}
};

Bound make_bound(double x, const Complex& s) {
  const double lx = std::log(x);
  if (s.imag() == 0.0) return Bound{lx, Complex(std::exp(-s.real() * lx), 0.0)};
  return Bound{lx, std::exp(-s * lx)};
}

Complex primitive_const(const Bound& a, const Bound& b, const Complex& s) {
  if (s == Complex(0.0, 0.0)) return Complex(b.lx - a.lx, 0.0);
  return (a.px - b.px) / s;
}

Complex primitive_log(const Bound& a, const Bound& b, const Complex& s) {
  if (s == Complex(0.0, 0.0))
    return Complex(0.5 * (b.lx * b.lx - a.lx * a.lx), 0.0);
  return (a.px * (s * a.lx + 1.0) - b.px * (s * b.lx + 1.0)) / (s * s);
}

// Integral_1^X phi(x) x^{-s-1} dx, exact up to rounding.  Pairs are visited
// m-major, n ascending, with compensated accumulation, so the sum order (and
// the result) is deterministic.
Complex phi_window_integral(const Complex& s, double X) {
  KahanComplexSum acc;
  for (long long m = 1; 2.0 * static_cast<double>(m) - 1.0 < X; ++m) {
    const double tm = 2.0 * static_cast<double>(m);
    for (long long n = 1;; ++n) {
      const double tn = 2.0 * static_cast<double>(n);
      const double p1 = (tm - 1.0) * (tn - 1.0);
      if (p1 >= X) break;
      const double p_lo = std::min(tn * (tm - 1.0), tm * (tn - 1.0));
      const double p_hi = std::max(tn * (tm - 1.0), tm * (tn - 1.0));
      const double p4 = tm * tn;
      const double lp1 = std::log(p1);

      const Bound b_start = make_bound(p1, s);
      if (p_lo >= X) {
        const Bound b_cut = make_bound(X, s);
        acc.add(primitive_log(b_start, b_cut, s) -
                lp1 * primitive_const(b_start, b_cut, s));
        continue;
      }
      const Bound b_lo = make_bound(p_lo, s);
      acc.add(primitive_log(b_start, b_lo, s) -
              lp1 * primitive_const(b_start, b_lo, s));

      Bound b_hi = b_lo;
      if (p_lo != p_hi) {  // constant middle plateau, only when m != n
        const double q2 = std::max(tm, tn);
        const double plateau = std::log(q2 / (q2 - 1.0));
        if (p_hi >= X) {
          const Bound b_cut = make_bound(X, s);
          acc.add(plateau * primitive_const(b_lo, b_cut, s));
          continue;
        }
        b_hi = make_bound(p_hi, s);
        acc.add(plateau * primitive_const(b_lo, b_hi, s));
      }

      const Bound b_end = make_bound(std::min(p4, X), s);
      acc.add(std::log(p4) * primitive_const(b_hi, b_end, s) -
              primitive_log(b_hi, b_end, s));
    }
  }
  return acc.value();
}

// Integral_X^inf ((1/4) log x + A) x^{-s-1} dx for Re s > 0 (the b -> inf
// limits of the primitives above).
Complex asymptote_tail_integral(const Complex& s, double X) {
  const Bound bx = make_bound(X, s);
  return 0.25 * bx.px * (s * bx.lx + 1.0) / (s * s) + constant_A() * bx.px / s;
}

// Envelope |phi_1(x)| <= K x^{-1/4} (K = 0.5, recorded bound) integrated
// past X bounds the un-added remainder tail of both phi transforms.
double remainder_tail_bound(const Complex& s, double X) {
  const double sig = s.real();
  return 0.5 * std::pow(X, -sig - 0.25) / (sig + 0.25);
}

void check_transform_window(double x_max) {
  if (!std::isfinite(x_max) || !(x_max >= 4.0) || !(x_max <= kMaxPhiArgument))
    throw DomainError("transform window x_max must lie in [4, 1e8]");
}

}  // namespace

Complex modified_mellin(const MellinFunction& f, const Complex& s, double tol) {
  if (!f.evaluator) throw DomainError("modified_mellin: evaluator is empty");
  if (!(tol > 0.0)) throw DomainError("modified_mellin: tol must be positive");
  if (!(s.real() > f.growth_hint))
    throw DivergentTransform(
        "modified Mellin transform diverges: Re s must exceed the growth "
        "hint");

  const Complex sp1 = s + 1.0;
  const bool real_path = (s.imag() == 0.0);
  auto integrand = [&](double x) -> Complex {
    const double lx = std::log(x);
    const double fv = f.evaluator(x);
    if (real_path) return Complex(fv * std::exp(-sp1.real() * lx), 0.0);
    return fv * std::exp(-sp1 * lx);
  };

  // Geometric segment extension: stop once two consecutive doubling
  // segments contribute less than tol/8 each in modulus.
  IntegrateOptions seg_opt;
  seg_opt.tol = tol / 64.0;
  KahanComplexSum acc;
  double lo = 1.0;
  double width = 1.0;
  double prev_mag = std::numeric_limits<double>::infinity();
  while (lo < 1e8) {
    const double hi = std::min(lo + width, 1e8);
    IntegrateOptions opt = seg_opt;
    // keep the phase advance of x^{-i Im s} modest across a panel
    opt.max_panel_width =
        std::min(hi - lo, 3.0 * lo / std::max(1.0, std::fabs(s.imag())));
    const QuadratureOutcome seg = integrate_finite(integrand, lo, hi, opt);
    acc.add(seg.value);
    const double mag = std::abs(seg.value);
    if (mag < 0.125 * tol && prev_mag < 0.125 * tol) return acc.value();
    prev_mag = mag;
    lo = hi;
    width *= 2.0;
  }
  throw NoConvergence(
      "modified_mellin: integrand has not decayed below tolerance by x = "
      "1e8");
}

Complex mellin_of_indicator_closed_form(const Complex& s) {
  if (!(s.real() > 0.0))
    throw DivergentTransform(
        "indicator transform diverges for Re s <= 0 (closed form requested "
        "inside the convergence half-plane only)");
  return eta(s) / s;  // eta(1) already returns the log 2 limit
}

QuadratureOutcome mellin_of_indicator_numeric(const Complex& s, double x_max) {
  if (!(s.real() > 0.0))
    throw DivergentTransform("indicator transform diverges for Re s <= 0");
  check_transform_window(x_max);

  const long long n_pairs = static_cast<long long>(std::floor(x_max / 2.0));
  const double x_eff = 2.0 * static_cast<double>(n_pairs);
  const bool real_path = (s.imag() == 0.0);
  KahanComplexSum acc;
  for (long long n = 1; n <= n_pairs; ++n) {
    const double odd = 2.0 * static_cast<double>(n) - 1.0;
    const double even = odd + 1.0;
    if (real_path) {
      acc.add(Complex(
          std::pow(odd, -s.real()) - std::pow(even, -s.real()), 0.0));
    } else {
      acc.add(std::exp(-s * std::log(odd)) - std::exp(-s * std::log(even)));
    }
  }
  // The truncated alternating pair tail averages to X^{-s}/2 (half the last
  // magnitude); the residual after adding it is O((|s|+1) X^{-Re s - 1}).
  const Complex x_pow = make_bound(x_eff, s).px;
  QuadratureOutcome out;
  out.value = (acc.value() + 0.5 * x_pow) / s;
  out.evaluations = n_pairs;
  out.tail_bound = (std::abs(s) + 1.0) *
                   std::pow(x_eff, -s.real() - 1.0) / (s.real() + 1.0);
  return out;
}

QuadratureOutcome mellin_of_phi_numeric(const Complex& s, double x_max) {
  if (!(s.real() > 0.0))
    throw DivergentTransform(
        "m[phi](s) diverges for Re s <= 0: phi grows like (1/4) log x");
  check_transform_window(x_max);
  QuadratureOutcome out;
  out.value = phi_window_integral(s, x_max) + asymptote_tail_integral(s, x_max);
  out.tail_bound = remainder_tail_bound(s, x_max);
  return out;
}

QuadratureOutcome mellin_of_phi_remainder_numeric(const Complex& s,
                                                  double x_max) {
  if (!(s.real() > -0.25))
    throw DivergentTransform(
        "m[phi_1](s) diverges for Re s <= -1/4: the remainder decays like "
        "x^{-1/4}");
  check_transform_window(x_max);
  const Bound b_one = make_bound(1.0, s);
  const Bound b_cut = make_bound(x_max, s);
  const Complex asym_window = 0.25 * primitive_log(b_one, b_cut, s) +
                              constant_A() * primitive_const(b_one, b_cut, s);
  QuadratureOutcome out;
  out.value = phi_window_integral(s, x_max) - asym_window;
  out.tail_bound = remainder_tail_bound(s, x_max);
  return out;
}

double phi_square_weighted_integral(double x_max) {
  if (!std::isfinite(x_max) || !(x_max >= 1.0) || !(x_max <= kMaxPhiArgument))
    throw DomainError("phi_square_weighted_integral: x_max must lie in [1, 1e8]");

  // Event sweep: phi(x) = alpha + beta log x between breakpoints; each pair
  // contributes slope/offset deltas at its (clipped) breakpoints.
  struct SweepEvent {
    double pos;
    double d_alpha;
    double d_beta;
  };
  std::vector<SweepEvent> events;
  events.reserve(static_cast<size_t>(
      std::min(1.4 * x_max * std::log(x_max + 4.0) + 16.0, 1.6e7)));

  for (long long m = 1; 2.0 * static_cast<double>(m) - 1.0 < x_max; ++m) {
    const double tm = 2.0 * static_cast<double>(m);
    for (long long n = 1;; ++n) {
      const double tn = 2.0 * static_cast<double>(n);
      const double p1 = (tm - 1.0) * (tn - 1.0);
      if (p1 >= x_max) break;
      const double p_lo = std::min(tn * (tm - 1.0), tm * (tn - 1.0));
      const double p_hi = std::max(tn * (tm - 1.0), tm * (tn - 1.0));
      const double p4 = tm * tn;
      const double lp1 = std::log(p1);
      const double lp4 = std::log(p4);

      events.push_back({p1, -lp1, 1.0});
      if (p_lo != p_hi) {
        const double q2 = std::max(tm, tn);
        const double plateau = std::log(q2 / (q2 - 1.0));
        if (p_lo < x_max) events.push_back({p_lo, lp1 + plateau, -1.0});
        if (p_hi < x_max) events.push_back({p_hi, lp4 - plateau, -1.0});
      } else {
        if (p_lo < x_max) events.push_back({p_lo, lp1 + lp4, -2.0});
      }
      if (p4 < x_max) events.push_back({p4, -lp4, 1.0});
    }
  }
  // Breakpoints are integers, so ties are exact; the (pos, d_beta, d_alpha)
  // order makes the sweep independent of enumeration order.
  std::sort(events.begin(), events.end(),
            [](const SweepEvent& a, const SweepEvent& b) {
              if (a.pos != b.pos) return a.pos < b.pos;
              if (a.d_beta != b.d_beta) return a.d_beta < b.d_beta;
              return a.d_alpha < b.d_alpha;
            });

  KahanSum alpha, beta, total;
  // Integral_a^b (alpha + beta log x)^2 x^{-2} dx in closed form.
  auto add_segment = [&](double a, double b) {
    const double la = std::log(a), lb = std::log(b);
    const double ia = 1.0 / a, ib = 1.0 / b;
    const double j0 = ia - ib;
    const double j1 = (la + 1.0) * ia - (lb + 1.0) * ib;
    const double j2 =
        (la * la + 2.0 * la + 2.0) * ia - (lb * lb + 2.0 * lb + 2.0) * ib;
    const double al = alpha.value();
    const double be = beta.value();
    total.add(al * al * j0 + 2.0 * al * be * j1 + be * be * j2);
  };

  double x_prev = 1.0;
  size_t i = 0;
  while (i < events.size()) {
    const double x_here = events[i].pos;
    if (x_here > x_prev) {
      add_segment(x_prev, x_here);
      x_prev = x_here;
    }
    while (i < events.size() && events[i].pos == x_here) {
      alpha.add(events[i].d_alpha);
      beta.add(events[i].d_beta);
      ++i;
    }
  }
  if (x_prev < x_max) add_segment(x_prev, x_max);
  return total.value();
}

double phi_square_tail_closed_form(double x_cut) {
  const double h = 0.25 * std::log(x_cut) + constant_A();
  return (h * h + 0.5 * h + 0.125) / x_cut;
}

double phi_square_tail_residual_bound(double x_cut) {
  const double k_env = 0.5;  // recorded envelope |phi_1| <= k_env x^{-1/4}
  const double head = 0.25 * std::log(x_cut) + constant_A();
  return 2.0 * k_env * 0.8 * (head + 0.2) * std::pow(x_cut, -1.25) +
         k_env * k_env * (2.0 / 3.0) * std::pow(x_cut, -1.5);
}

double inverse_mellin_phi(double x, double c, double T, double tol) {
  if (!(x >= 1.0) || !(x <= kMaxPhiArgument))
    throw DomainError("inverse_mellin_phi: x must lie in [1, 1e8]");
  if (!(c > 0.0))
    throw DomainError("inverse_mellin_phi: contour must lie right of 0");
  if (!(T > 0.0) || !(T <= kZetaMaxAbsT))
    throw DomainError("inverse_mellin_phi: T must lie in (0, 1e5]");
  if (!(tol > 0.0)) throw DomainError("inverse_mellin_phi: tol must be positive");

  const ZetaLineEvaluator line(c, T);
  const double lx = std::log(x);
  // Integrand of (1/2 pi) Integral_{-T}^{T}; conjugate symmetry folds the
  // line onto [0, T] with twice the real part.
  auto integrand = [&](double t) -> double {
    const Complex s(c, t);
    const Complex e = line.eta_at(t);
    return (e * e * std::exp(s * lx) / (s * s)).real();
  };
  IntegrateOptions opt;
  opt.tol = 0.5 * kPi * tol;
  opt.max_panel_width = std::min(2.0, 3.0 / std::max(1.0, lx));
  opt.max_evaluations = 4'000'000;
  const QuadratureOutcome out = integrate_finite(integrand, 0.0, T, opt);
  return out.real() / kPi;
}

IdentityReport parseval_pair(const MellinFunction& f, const MellinFunction& g,
                             double sigma, double T, double tol) {
  const auto t0 = Clock::now();
  if (!f.evaluator || !g.evaluator)
    throw DomainError("parseval_pair: both functions need evaluators");
  if (!(sigma > 0.0) || !(sigma > f.growth_hint) || !(sigma > g.growth_hint))
    throw DivergentTransform(
        "parseval_pair: sigma must exceed both growth hints (and 0)");
  if (!(T > 1.0)) throw DomainError("parseval_pair: T must exceed 1");
  if (!(tol > 0.0)) throw DomainError("parseval_pair: tol must be positive");

  const double side_tol = 0.25 * tol;

  // x side: Integral_1^inf f g x^{-1-2 sigma} dx by geometric extension.
  const double w_exp = -1.0 - 2.0 * sigma;
  IntegrateOptions x_opt;
  x_opt.tol = side_tol;
  const QuadratureOutcome x_side = integrate_semi_infinite(
      std::function<double(double)>([&](double x) {
        return f.evaluator(x) * g.evaluator(x) * std::pow(x, w_exp);
      }),
      1.0, TailModel::none(), x_opt);

  // line side: (1/2 pi) Integral_{-T}^{T} F conj(G) dt; real-valued f, g give
  // a conjugate-even integrand, so fold onto [0, T].
  auto transform_of =
      [](const MellinFunction& h) -> std::function<Complex(const Complex&)> {
    if (h.transform) return h.transform;
    return [&h](const Complex& z) { return modified_mellin(h, z, 1e-9); };
  };
  const auto F = transform_of(f);
  const auto G = transform_of(g);
  auto spectral = [&](double t) -> double {
    const Complex z(sigma, t);
    return (F(z) * std::conj(G(z))).real();
  };
  IntegrateOptions line_opt;
  line_opt.tol = side_tol * kPi;
  line_opt.max_panel_width = 2.0;
  line_opt.max_evaluations = 4'000'000;
  const QuadratureOutcome line_side = integrate_finite(spectral, 0.0, T, line_opt);

  // Beyond T the spectrum follows a mean law ~ C/t^2; sample C near the cut
  // and add the closed tail C/(pi T).
  KahanSum c_samples;
  const int kSamples = 256;
  for (int j = 0; j < kSamples; ++j) {
    const double t = 0.9 * T + 0.1 * T * (j + 0.5) / kSamples;
    c_samples.add(spectral(t) * t * t);
  }
  const double c_est = c_samples.value() / kSamples;
  const double correction = c_est / (kPi * T);

  const Complex lhs = x_side.value;
  const Complex rhs(line_side.real() / kPi + correction, 0.0);
  const double tail_bound =
      x_side.tail_bound + 3.0 * std::fabs(c_est) / (kPi * T);
  return make_identity_report("parseval", {{"sigma", sigma}, {"t_max", T}},
                              lhs, rhs, tol, tail_bound, ms_since(t0));
}

IdentityReport mellin_square_convolution(const std::function<double(double)>& f,
                                         double a, double b, const Complex& s,
                                         double tol) {
  const auto t0 = Clock::now();
  if (!f) throw DomainError("mellin_square_convolution: f is empty");
  if (!(0.0 < a) || !(a < b) || !std::isfinite(b))
    throw DomainError("mellin_square_convolution requires 0 < a < b < inf");
  if (!(tol > 0.0))
    throw DomainError("mellin_square_convolution: tol must be positive");

  const bool real_path = (s.imag() == 0.0);
  auto weight = [&](double x) -> Complex {
    const double lx = std::log(x);
    if (real_path) return Complex(std::exp(-s.real() * lx), 0.0);
    return std::exp(-s * lx);
  };

  // Direct side: a coarse pass fixes the scale, then the line integral is
  // tightened so squaring does not lose the requested digits.
  auto line_integrand = [&](double x) -> Complex { return f(x) * weight(x); };
  IntegrateOptions direct_opt;
  direct_opt.tol = 1e-6;
  const Complex coarse = integrate_finite(line_integrand, a, b, direct_opt).value;
  direct_opt.tol = std::max(1e-13, 1e-10 * std::abs(coarse));
  const Complex line = integrate_finite(line_integrand, a, b, direct_opt).value;
  const Complex lhs = line * line;

  // Convolution side: two outer pieces with moving inner limits.
  const double scale = std::max(1.0, std::abs(lhs));
  const double outer_tol = std::max(1e-12, 0.125 * tol * scale);
  IntegrateOptions inner_opt;
  inner_opt.tol = outer_tol / (10.0 * (b * b - a * a));
  auto inner_value = [&](double u_lo, double u_hi, double x) -> double {
    return integrate_finite(
               [&](double u) { return f(u) * f(x / u) / u; }, u_lo, u_hi,
               inner_opt)
        .real();
  };
  IntegrateOptions outer_opt;
  outer_opt.tol = 0.5 * outer_tol;
  outer_opt.max_evaluations = 2'000'000;
  const Complex rhs_low =
      integrate_finite(
          [&](double x) -> Complex { return weight(x) * inner_value(a, x / a, x); },
          a * a, a * b, outer_opt)
          .value;
  const Complex rhs_high =
      integrate_finite(
          [&](double x) -> Complex { return weight(x) * inner_value(x / b, b, x); },
          a * b, b * b, outer_opt)
          .value;
  const Complex rhs = rhs_low + rhs_high;

  return make_identity_report(
      "convolution", {{"a", a}, {"b", b}, {"s_re", s.real()}, {"s_im", s.imag()}},
      lhs, rhs, tol, 0.0, ms_since(t0));
}

}  // namespace zv

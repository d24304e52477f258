// ============================================================================
// Identity checks.  Mean-value integrals run over a shared per-line zeta
// evaluator and are completed with closed-form mean-law tails; transform
// identities lean on the exact piecewise window transforms.  Suite-style
// checks (convolution, lorentzian) aggregate to a single worst-case report
// so output size stays bounded.
// ============================================================================

#include "zetaverify/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <memory>
#include <random>

#include "zetaverify/mellin.hpp"
#include "zetaverify/phi.hpp"
#include "zetaverify/quadrature.hpp"
#include "zetaverify/zeta.hpp"

namespace zv {
namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void check_moment_args(double T, double tol) {
  if (!(T >= 10.0) || !(T <= kZetaMaxAbsT))
    throw DomainError("moment checks need T in [10, 1e5]");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
}

// Mean-law completion of Integral_T^inf mean / (sigma^2 + t^2) dt.
double lorentzian_mean_tail(double mean, double sigma, double T) {
  return mean * (0.5 * kPi - std::atan(T / sigma)) / sigma;
}

}  // namespace

IdentityReport eta_line_mean_value(double sigma, double T, double tol) {
  const auto t0 = Clock::now();
  if (!(sigma > 0.0))
    throw DomainError("the weighted second moment needs sigma > 0");
  check_moment_args(T, tol);

  const double mean_sq = eta_mean_square_constant(sigma);
  const double rhs = kPi * mean_sq / sigma;  // = 2 pi log 2 at sigma = 1/2

  const ZetaLineEvaluator line(sigma, T);
  auto integrand = [&](double t) {
    return std::norm(line.eta_at(t)) / (sigma * sigma + t * t);
  };
  IntegrateOptions opt;
  opt.tol = tol * rhs / 16.0;
  opt.max_panel_width = 2.0;
  opt.max_evaluations = 4'000'000;
  const QuadratureOutcome head = integrate_finite(integrand, 0.0, T, opt);
  const double tail = lorentzian_mean_tail(mean_sq, sigma, T);
  const double lhs = 2.0 * (head.real() + tail);

  return make_identity_report("eta-line", {{"sigma", sigma}, {"t_max", T}},
                              lhs, rhs, tol, 6.0 * tail, ms_since(t0));
}

IdentityReport critical_line_mean_value(double T, double tol) {
  const auto t0 = Clock::now();
  check_moment_args(T, tol);

  const double mean_sq = eta_mean_square_constant(0.5);  // log 2 (limit)
  const double rhs = kPi * mean_sq;

  const ZetaLineEvaluator line(0.5, T);
  auto integrand = [&](double t) {
    return std::norm(line.eta_at(t)) / (0.25 + t * t);
  };
  IntegrateOptions opt;
  opt.tol = tol * rhs / 16.0;
  opt.max_panel_width = 2.0;
  opt.max_evaluations = 4'000'000;
  const QuadratureOutcome head = integrate_finite(integrand, 0.0, T, opt);
  const double tail = lorentzian_mean_tail(mean_sq, 0.5, T);
  const double lhs = head.real() + tail;

  return make_identity_report("critical-line", {{"t_max", T}}, lhs, rhs, tol,
                              3.0 * tail, ms_since(t0));
}

IdentityReport phi_transform_identity(const Complex& s, double x_max, double tol) {
  const auto t0 = Clock::now();
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const QuadratureOutcome transform = mellin_of_phi_numeric(s, x_max);
  const Complex lhs = s * s * transform.value;
  const Complex rhs = eta(s) * eta(s);  // eta(1) = log 2 handles the limit
  return make_identity_report(
      "phi-mellin", {{"s_re", s.real()}, {"s_im", s.imag()}, {"x_max", x_max}},
      lhs, rhs, tol, std::norm(s) * transform.tail_bound, ms_since(t0));
}

IdentityReport fourth_moment_identity(double T, double x_max, double tol) {
  const auto t0 = Clock::now();
  check_moment_args(T, tol);

  const double sweep = phi_square_weighted_integral(x_max);
  const double rhs = kPi * (sweep + phi_square_tail_closed_form(x_max));

  const ZetaLineEvaluator line(0.5, T);
  auto integrand = [&](double t) {
    const double w = std::norm(line.eta_at(t));
    const double den = 0.25 + t * t;
    return w * w / (den * den);
  };
  IntegrateOptions opt;
  opt.tol = tol * rhs / 16.0;
  opt.max_panel_width = 2.0;
  opt.max_evaluations = 4'000'000;
  const QuadratureOutcome head = integrate_finite(integrand, 0.0, T, opt);

  // Beyond T the integrand follows a mean law ~ C/t^4; sample C near the
  // cut and close with C/(3 T^3).
  KahanSum c_samples;
  const int kSamples = 256;
  for (int j = 0; j < kSamples; ++j) {
    const double t = 0.9 * T + 0.1 * T * (j + 0.5) / kSamples;
    c_samples.add(integrand(t) * t * t * t * t);
  }
  const double c_est = c_samples.value() / kSamples;
  const double tail = c_est / (3.0 * T * T * T);
  const double lhs = head.real() + tail;

  const double tail_bound =
      3.0 * std::fabs(tail) + kPi * phi_square_tail_residual_bound(x_max);
  return make_identity_report("fourth-moment",
                              {{"t_max", T}, {"x_max", x_max}}, lhs, rhs, tol,
                              tail_bound, ms_since(t0));
}

IdentityReport remainder_decay_fit(const std::vector<double>& x_grid) {
  const auto t0 = Clock::now();
  std::vector<double> grid = x_grid;
  if (grid.empty()) {
    const int n = 50;
    grid.reserve(n);
    for (int i = 0; i < n; ++i)
      grid.push_back(1e2 * std::pow(1e6 / 1e2, i / double(n - 1)));
  }
  if (grid.size() < 10)
    throw DomainError("decay fit needs at least 10 grid points");
  for (double x : grid)
    if (!(x >= 10.0) || !(x <= kMaxPhiArgument))
      throw DomainError("decay grid points must lie in [10, 1e8]");

  // Least squares of log |phi_1| against log x, excluding near-crossings
  // where the log would blow up without carrying decay information.
  KahanSum sum_u, sum_v, sum_uu, sum_uv;
  long used = 0;
  double envelope_max = 0.0;
  for (double x : grid) {
    const double r = phi_remainder(x);
    envelope_max = std::max(envelope_max, std::fabs(r) * std::pow(x, 0.2));
    if (std::fabs(r) < 1e-6) continue;
    const double u = std::log(x);
    const double v = std::log(std::fabs(r));
    sum_u.add(u);
    sum_v.add(v);
    sum_uu.add(u * u);
    sum_uv.add(u * v);
    ++used;
  }
  if (used < 5)
    throw InsufficientData(
        "decay fit has fewer than 5 usable grid points (the rest sit on "
        "near-zero crossings of the remainder)");
  const double n = static_cast<double>(used);
  const double det = n * sum_uu.value() - sum_u.value() * sum_u.value();
  const double slope =
      (n * sum_uv.value() - sum_u.value() * sum_v.value()) / det;

  const auto [min_it, max_it] = std::minmax_element(grid.begin(), grid.end());
  return make_identity_report(
      "decay",
      {{"points", n},
       {"x_min", *min_it},
       {"x_max", *max_it},
       {"envelope_max", envelope_max}},
      slope, -0.25, 0.2, 0.0, ms_since(t0));
}

IdentityReport phi1_identity(const Complex& s, double x_max, double tol) {
  const auto t0 = Clock::now();
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const QuadratureOutcome rem = mellin_of_phi_remainder_numeric(s, x_max);
  const Complex lhs = constant_A() * s + 0.25 + s * s * rem.value;
  const Complex rhs = eta(s) * eta(s);
  return make_identity_report(
      "remainder-mellin",
      {{"s_re", s.real()}, {"s_im", s.imag()}, {"x_max", x_max}}, lhs, rhs,
      tol, std::norm(s) * rem.tail_bound, ms_since(t0));
}

// ----------------------------------------------------------------------------
// Registry
// ----------------------------------------------------------------------------
namespace {

// Picks the representative for a suite: the first failure if any, otherwise
// the case with the largest relative error, and rebuilds it with suite-wide
// params and total elapsed time.
IdentityReport aggregate_suite(const std::string& name,
                               const std::vector<IdentityReport>& cases,
                               std::vector<std::pair<std::string, double>> tag,
                               double tolerance, double elapsed) {
  size_t worst = 0;
  bool found_fail = false;
  for (size_t i = 0; i < cases.size(); ++i) {
    if (!cases[i].pass) {
      if (!found_fail) {
        worst = i;
        found_fail = true;
      }
    } else if (!found_fail && cases[i].rel_error > cases[worst].rel_error) {
      worst = i;
    }
  }
  const IdentityReport& rep = cases[worst];
  std::vector<std::pair<std::string, double>> params;
  params.emplace_back("cases", static_cast<double>(cases.size()));
  for (auto& kv : tag) params.push_back(kv);
  for (const auto& kv : rep.params)
    params.emplace_back("worst_" + kv.first, kv.second);
  double tail = 0.0;
  for (const auto& c : cases) tail = std::max(tail, c.tail_bound);
  return make_identity_report(name, std::move(params), rep.lhs, rep.rhs,
                              tolerance, tail, elapsed);
}

std::vector<IdentityReport> run_convolution_suite(const CheckOverrides& o) {
  const auto t0 = Clock::now();
  const double tol = o.tol.value_or(1e-6);
  std::mt19937_64 rng(987654321ULL);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> degree(0, 4);
  const Complex s_values[] = {Complex(0.0, 0.0), Complex(1.0, 0.0),
                              Complex(2.0, 0.0), Complex(1.0, 1.0),
                              Complex(0.5, 3.0)};
  std::vector<IdentityReport> cases;
  cases.reserve(50);
  for (int i = 0; i < 50; ++i) {
    const int deg = degree(rng);
    std::array<double, 5> c{};
    for (int k = 0; k <= deg; ++k) c[k] = coeff(rng);
    const double a = 0.05 + 3.95 * unit(rng);
    const double b = a + 0.2 + (5.0 - a - 0.2) * unit(rng);
    auto poly = [c](double x) {
      return c[0] + x * (c[1] + x * (c[2] + x * (c[3] + x * c[4])));
    };
    const Complex s = o.s.value_or(s_values[i % 5]);
    cases.push_back(mellin_square_convolution(poly, a, b, s, tol));
  }
  return {aggregate_suite("convolution", cases, {}, tol, ms_since(t0))};
}

std::vector<IdentityReport> run_lorentzian_suite(const CheckOverrides& o) {
  const auto t0 = Clock::now();
  const double tol = o.tol.value_or(1e-8);
  const double alphas[] = {0.0, 0.5, std::log(2.0), 3.0};
  const double sigmas[] = {0.25, 0.5, 1.0, 2.0};
  std::vector<IdentityReport> cases;
  for (double alpha : alphas) {
    for (double sigma : sigmas) {
      const auto case_t0 = Clock::now();
      const double closed = kPi / sigma * std::exp(-alpha * sigma);
      const QuadratureOutcome out = cosine_lorentzian_integral(
          alpha, sigma, std::max(1e-11, 1e-9 * closed));
      cases.push_back(make_identity_report(
          "lorentzian", {{"alpha", alpha}, {"sigma", sigma}}, out.value,
          closed, tol, out.tail_bound, ms_since(case_t0)));
    }
  }
  return {aggregate_suite("lorentzian", cases, {}, tol, ms_since(t0))};
}

std::vector<IdentityReport> run_indicator_mellin(const CheckOverrides& o) {
  const double x_max = o.x_max.value_or(1e6);
  const double tol = o.tol.value_or(1e-4);
  std::vector<Complex> points;
  if (o.s)
    points.push_back(*o.s);
  else
    points = {Complex(2.0, 0.0), Complex(1.5, 0.0), Complex(0.5, 1.0),
              Complex(0.75, 5.0)};
  std::vector<IdentityReport> reports;
  for (const Complex& s : points) {
    const auto t0 = Clock::now();
    const QuadratureOutcome numeric = mellin_of_indicator_numeric(s, x_max);
    const Complex closed = mellin_of_indicator_closed_form(s);
    reports.push_back(make_identity_report(
        "indicator-mellin",
        {{"s_re", s.real()}, {"s_im", s.imag()}, {"x_max", x_max}},
        numeric.value, closed, tol, numeric.tail_bound, ms_since(t0)));
  }
  return reports;
}

std::vector<IdentityReport> run_inversion(const CheckOverrides& o) {
  const double T = o.t_max.value_or(1e3);
  const double tol = o.tol.value_or(kTolCriticalLine);
  const double contour = 1.0;
  std::vector<IdentityReport> reports;
  for (double x : {1.0, 2.0, 100.0}) {
    const auto t0 = Clock::now();
    const double inverted = inverse_mellin_phi(x, contour, T, 1e-4);
    reports.push_back(make_identity_report(
        "inversion", {{"x", x}, {"c", contour}, {"t_max", T}}, inverted,
        phi_exact(x), tol, 0.0, ms_since(t0)));
  }
  return reports;
}

std::vector<IdentityReport> run_parseval(const CheckOverrides& o) {
  const double T = o.t_max.value_or(4000.0);
  const double tol = o.tol.value_or(1e-4);
  std::vector<double> sigmas;
  if (o.sigma)
    sigmas.push_back(*o.sigma);
  else
    sigmas = {0.75, 1.0};
  std::vector<IdentityReport> reports;
  for (double sigma : sigmas) {
    // The indicator transform along this line is eta(s)/s; share one
    // tabulated line evaluator across every quadrature node.
    auto line = std::make_shared<ZetaLineEvaluator>(sigma, T);
    MellinFunction f;
    f.evaluator = [](double x) {
      return static_cast<double>(indicator_g(x));
    };
    f.growth_hint = 0.0;
    f.transform = [line](const Complex& z) { return line->eta_at(z.imag()) / z; };
    reports.push_back(parseval_pair(f, f, sigma, T, tol));
  }
  return reports;
}

std::vector<IdentityReport> run_phi_mellin(const CheckOverrides& o) {
  const double x_max = o.x_max.value_or(1e6);
  std::vector<IdentityReport> reports;
  if (o.s) {
    reports.push_back(phi_transform_identity(*o.s, x_max, o.tol.value_or(kTolQuadVsClosed)));
    return reports;
  }
  // Default tolerances tighten with distance from the convergence boundary.
  struct Point {
    Complex s;
    double tol;
  };
  const Point points[] = {{Complex(2.0, 0.0), 1e-6},
                          {Complex(1.0, 0.0), 1e-4},
                          {Complex(0.5, 1.0), 1e-3}};
  for (const auto& p : points)
    reports.push_back(phi_transform_identity(p.s, x_max, o.tol.value_or(p.tol)));
  return reports;
}

std::vector<IdentityReport> run_remainder_mellin(const CheckOverrides& o) {
  const double x_max = o.x_max.value_or(1e6);
  const double tol = o.tol.value_or(kTolQuadVsQuad);
  std::vector<Complex> points;
  if (o.s)
    points.push_back(*o.s);
  else
    points = {Complex(2.0, 0.0), Complex(0.25, 0.0), Complex(-0.1, 0.0)};
  std::vector<IdentityReport> reports;
  for (const Complex& s : points)
    reports.push_back(phi1_identity(s, x_max, tol));
  return reports;
}

std::vector<IdentityReport> run_eta_line(const CheckOverrides& o) {
  const double T = o.t_max.value_or(1e4);
  const double tol = o.tol.value_or(kTolQuadVsClosed);
  std::vector<double> sigmas;
  if (o.sigma)
    sigmas.push_back(*o.sigma);
  else
    sigmas = {0.6, 0.75, 1.0, 1.5};
  std::vector<IdentityReport> reports;
  for (double sigma : sigmas) reports.push_back(eta_line_mean_value(sigma, T, tol));
  return reports;
}

std::vector<IdentityReport> run_decay(const CheckOverrides& o) {
  std::vector<double> grid;
  const double hi = std::min(o.x_max.value_or(1e6), kMaxPhiArgument);
  if (!(hi > 1e2)) throw DomainError("decay grid needs x_max > 100");
  const int n = 50;
  for (int i = 0; i < n; ++i)
    grid.push_back(1e2 * std::pow(hi / 1e2, i / double(n - 1)));
  return {remainder_decay_fit(grid)};
}

}  // namespace

const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names = {
      "convolution",      "critical-line", "decay",
      "eta-line",         "fourth-moment", "indicator-mellin",
      "inversion",        "lorentzian",    "parseval",
      "phi-mellin",       "remainder-mellin"};
  return names;
}

std::vector<IdentityReport> run_check(const std::string& name,
                                      const CheckOverrides& o) {
  if (name == "convolution") return run_convolution_suite(o);
  if (name == "critical-line")
    return {critical_line_mean_value(o.t_max.value_or(5000.0),
                       o.tol.value_or(kTolCriticalLine))};
  if (name == "decay") return run_decay(o);
  if (name == "eta-line") return run_eta_line(o);
  if (name == "fourth-moment")
    return {fourth_moment_identity(o.t_max.value_or(500.0), o.x_max.value_or(1e5),
                       o.tol.value_or(kTolQuadVsQuad))};
  if (name == "indicator-mellin") return run_indicator_mellin(o);
  if (name == "inversion") return run_inversion(o);
  if (name == "lorentzian") return run_lorentzian_suite(o);
  if (name == "parseval") return run_parseval(o);
  if (name == "phi-mellin") return run_phi_mellin(o);
  if (name == "remainder-mellin") return run_remainder_mellin(o);
  throw DomainError("unknown check: " + name);
}

std::vector<IdentityReport> run_all(const CheckOverrides& overrides) {
  std::vector<IdentityReport> reports;
  for (const std::string& name : all_check_names()) {
    auto batch = run_check(name, overrides);
    reports.insert(reports.end(), batch.begin(), batch.end());
  }
  return reports;
}

}  // namespace zv

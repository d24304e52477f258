// Unit tests for the adaptive quadrature layer: finite panels, tail models,
// vertical-line integrals, and the alternating-series accelerator.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "zetaverify/quadrature.hpp"
#include "zetaverify/zeta.hpp"

using zv::Complex;
using zv::IntegrateOptions;
using zv::QuadratureOutcome;
using zv::TailModel;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

// Reference values computed independently at high precision and recorded.
constexpr double kCosLorentzHead10 = 1.1484783197151257;   // int_{-10}^{10} cos x/(1+x^2)
constexpr double kPhiSquareTailFull = 0.28887741125149938; // A^2 + A/2 + 1/8
}  // namespace

TEST_CASE("polynomial is integrated by a single Kronrod panel") {
  const QuadratureOutcome out =
      zv::integrate_finite([](double x) { return x * x; }, 0.0, 1.0);
  CHECK(out.real() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(out.evaluations <= 45);
  CHECK(out.value.imag() == 0.0);
  CHECK(out.tail_bound == 0.0);
}

TEST_CASE("smooth integrals match closed forms") {
  SUBCASE("sin over [0, pi]") {
    const QuadratureOutcome out =
        zv::integrate_finite([](double x) { return std::sin(x); }, 0.0, kPi);
    CHECK(out.real() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(out.evaluations <= 1000);
  }
  SUBCASE("sqrt over [0, 1]") {
    IntegrateOptions opt;
    opt.tol = 1e-9;
    const QuadratureOutcome out =
        zv::integrate_finite([](double x) { return std::sqrt(x); }, 0.0, 1.0, opt);
    CHECK(out.real() == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  }
  SUBCASE("oscillatory cosine with a panel-width cap") {
    IntegrateOptions opt;
    opt.tol = 1e-10;
    opt.max_panel_width = 0.25;
    const QuadratureOutcome out = zv::integrate_finite(
        [](double x) { return std::cos(40.0 * x); }, 0.0, 1.0, opt);
    CHECK(std::fabs(out.real() - std::sin(40.0) / 40.0) <= 1e-10);
  }
  SUBCASE("cosine against a Lorentzian envelope") {
    IntegrateOptions opt;
    opt.tol = 1e-12;
    const QuadratureOutcome out = zv::integrate_finite(
        [](double x) { return std::cos(x) / (1.0 + x * x); }, -10.0, 10.0, opt);
    CHECK(std::fabs(out.real() - kCosLorentzHead10) <= 1e-11);
  }
}

TEST_CASE("integrable endpoint singularity converges by adaptive refinement") {
  IntegrateOptions opt;
  opt.tol = 1e-6;
  const QuadratureOutcome out = zv::integrate_finite(
      [](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, opt);
  CHECK(out.real() == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(out.error_estimate <= opt.tol * 1.05);
}

TEST_CASE("jump discontinuity is localized without spurious failure") {
  IntegrateOptions opt;
  opt.tol = 1e-9;
  const QuadratureOutcome out = zv::integrate_finite(
      [](double x) { return x > 1.0 / 3.0 ? 1.0 : 0.0; }, 0.0, 1.0, opt);
  CHECK(std::fabs(out.real() - 2.0 / 3.0) <= 1e-9);
}

TEST_CASE("degenerate interval integrates to zero with no evaluations") {
  const QuadratureOutcome out =
      zv::integrate_finite([](double x) { return std::exp(x); }, 2.5, 2.5);
  CHECK(out.value == Complex(0.0, 0.0));
  CHECK(out.evaluations == 0);
}

TEST_CASE("invalid inputs and exhausted budgets throw") {
  SUBCASE("reversed interval") {
    CHECK_THROWS_AS(zv::integrate_finite([](double x) { return x; }, 1.0, 0.0),
                    zv::DomainError);
  }
  SUBCASE("non-positive tolerance") {
    IntegrateOptions opt;
    opt.tol = 0.0;
    CHECK_THROWS_AS(zv::integrate_finite([](double x) { return x; }, 0.0, 1.0, opt),
                    zv::DomainError);
  }
  SUBCASE("evaluation budget exhausted on a hard singularity") {
    IntegrateOptions opt;
    opt.tol = 1e-12;
    opt.max_evaluations = 100;
    CHECK_THROWS_AS(zv::integrate_finite(
                        [](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, opt),
                    zv::NoConvergence);
  }
}

TEST_CASE("complex-valued integrand") {
  // int_0^{pi/2} e^{ix} dx = 1 + i.
  const QuadratureOutcome out = zv::integrate_finite(
      [](double x) { return std::exp(Complex(0.0, x)); }, 0.0, kPi / 2.0);
  CHECK(out.value.real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(out.value.imag() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("quadrature is linear and respects even symmetry") {
  IntegrateOptions opt;
  opt.tol = 1e-12;
  auto f = [](double x) { return x * x; };
  auto g = [](double x) { return std::sin(x); };
  auto combo = [&](double x) { return 2.0 * f(x) + 3.0 * g(x); };
  const double lhs = zv::integrate_finite(combo, 0.0, 2.0, opt).real();
  const double rhs = 2.0 * zv::integrate_finite(f, 0.0, 2.0, opt).real() +
                     3.0 * zv::integrate_finite(g, 0.0, 2.0, opt).real();
  CHECK(std::fabs(lhs - rhs) <= 1e-11);

  auto even = [](double x) { return std::cos(x) / (4.0 + x * x); };
  const double full = zv::integrate_finite(even, -7.0, 7.0, opt).real();
  const double half = zv::integrate_finite(even, 0.0, 7.0, opt).real();
  CHECK(std::fabs(full - 2.0 * half) <= 1e-11);
}

TEST_CASE("semi-infinite integral with an inverse-power tail model") {
  SUBCASE("exact power law x^-2 from 1") {
    IntegrateOptions opt;
    opt.tol = 1e-10;
    const QuadratureOutcome out = zv::integrate_semi_infinite(
        [](double x) { return 1.0 / (x * x); }, 1.0,
        TailModel::inverse_power(2.0), opt);
    CHECK(std::fabs(out.real() - 1.0) <= 1e-10);
    CHECK(out.tail_bound > 0.0);
    // The reported diagnostics must cover the actual error.
    CHECK(std::fabs(out.real() - 1.0) <= out.error_estimate + out.tail_bound);
  }
  SUBCASE("Lorentzian from 0") {
    IntegrateOptions opt;
    opt.tol = 1e-10;
    const QuadratureOutcome out = zv::integrate_semi_infinite(
        [](double x) { return 1.0 / (1.0 + x * x); }, 0.0,
        TailModel::inverse_power(2.0), opt);
    CHECK(std::fabs(out.real() - kPi / 2.0) <= 1e-9);
  }
  SUBCASE("super-polynomial decay settles early") {
    IntegrateOptions opt;
    opt.tol = 1e-10;
    const QuadratureOutcome out = zv::integrate_semi_infinite(
        [](double x) { return std::exp(-x); }, 0.0,
        TailModel::inverse_power(2.0), opt);
    CHECK(std::fabs(out.real() - 1.0) <= 1e-9);
  }
  SUBCASE("exponent must exceed 1") {
    CHECK_THROWS_AS(zv::integrate_semi_infinite(
                        [](double x) { return 1.0 / (x * x); }, 1.0,
                        TailModel::inverse_power(1.0)),
                    zv::TailModelUnusable);
  }
}

TEST_CASE("semi-infinite integral with no tail model extends geometrically") {
  IntegrateOptions opt;
  opt.tol = 1e-10;
  SUBCASE("exponential decay") {
    const QuadratureOutcome out = zv::integrate_semi_infinite(
        [](double x) { return std::exp(-x); }, 0.0, TailModel::none(), opt);
    CHECK(std::fabs(out.real() - 1.0) <= 1e-9);
    CHECK(out.tail_bound > 0.0);
  }
  SUBCASE("damped oscillation") {
    const QuadratureOutcome out = zv::integrate_semi_infinite(
        [](double x) { return std::exp(-x) * std::cos(x); }, 0.0,
        TailModel::none(), opt);
    CHECK(std::fabs(out.real() - 0.5) <= 1e-9);
  }
  SUBCASE("integrand that never decays fails loudly") {
    IntegrateOptions lax;
    lax.tol = 1e-3;
    lax.max_evaluations = 100'000'000;
    CHECK_THROWS_AS(zv::integrate_semi_infinite(
                        [](double x) { return 1.0 / (1.0 + x); }, 0.0,
                        TailModel::none(), lax),
                    zv::NoConvergence);
  }
}

TEST_CASE("mean-square tail model reproduces a Lorentzian-mean tail") {
  // f(t) = M(sigma)/(1 + t^2) decays exactly like the model's average law
  // with the same constant, so the truncated integral plus the modeled tail
  // must match the closed form M(sigma) * (pi/2 - atan a).
  const double sigma = 1.0;
  const double mean = zv::eta_mean_square_constant(sigma);
  IntegrateOptions opt;
  opt.tol = 1e-6;
  const QuadratureOutcome out = zv::integrate_semi_infinite(
      [mean](double t) { return mean / (1.0 + t * t); }, 1.0,
      TailModel::eta_mean_square(sigma), opt);
  const double expected = mean * (kPi / 2.0 - std::atan(1.0));
  CHECK(std::fabs(out.real() - expected) <= 1e-6);
  CHECK(out.tail_bound > 0.0);
  CHECK(std::fabs(out.real() - expected) <= out.error_estimate + out.tail_bound);
}

TEST_CASE("squared-logarithm tail model integrates its own asymptote exactly") {
  // f(x) = ((1/4) log x + A)^2 / x^2: the closed-form tail is exact for this
  // integrand, so the total must equal A^2 + A/2 + 1/8.
  const double A = zv::constant_A();
  IntegrateOptions opt;
  opt.tol = 1e-6;
  const QuadratureOutcome out = zv::integrate_semi_infinite(
      [A](double x) {
        const double h = 0.25 * std::log(x) + A;
        return h * h / (x * x);
      },
      1.0, TailModel::phi_square_closed_form(), opt);
  CHECK(std::fabs(out.real() - kPhiSquareTailFull) <= 1e-6);
  CHECK(out.tail_bound > 0.0);
}

TEST_CASE("vertical-line integral carries the 1/(2 pi) normalization") {
  SUBCASE("constant integrand") {
    const QuadratureOutcome out = zv::integrate_vertical_line(
        [](const Complex&) { return Complex(1.0, 0.0); }, 2.0, kPi);
    CHECK(out.value.real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::fabs(out.value.imag()) <= 1e-12);
  }
  SUBCASE("inverse square modulus on the line Re s = 1") {
    IntegrateOptions opt;
    opt.tol = 1e-13;
    const double T = 1000.0;
    const QuadratureOutcome out = zv::integrate_vertical_line(
        [](const Complex& s) { return Complex(1.0 / std::norm(s), 0.0); }, 1.0,
        T, opt);
    const double expected = std::atan(T) / kPi;
    CHECK(std::fabs(out.value.real() - expected) <= 1e-12);
  }
  SUBCASE("odd imaginary parts cancel over the symmetric window") {
    const QuadratureOutcome out = zv::integrate_vertical_line(
        [](const Complex& s) { return Complex(0.0, s.imag()); }, 0.5, 3.0);
    CHECK(std::fabs(out.value.imag()) <= 1e-12);
  }
}

TEST_CASE("alternating series accelerator hits machine precision") {
  const double sum = zv::alternating_series_sum(
      [](long k) { return 1.0 / static_cast<double>(k + 1); });
  CHECK(std::fabs(sum - std::log(2.0)) <= 1e-13);

  // Leibniz series for pi/4.
  const double leibniz = zv::alternating_series_sum(
      [](long k) { return 1.0 / static_cast<double>(2 * k + 1); });
  CHECK(std::fabs(leibniz - kPi / 4.0) <= 1e-13);
}

TEST_CASE("full-line cosine-Lorentzian integral matches its closed form") {
  const double alphas[4] = {0.0, 0.5, std::log(2.0), 3.0};
  const double sigmas[4] = {0.25, 0.5, 1.0, 2.0};
  for (double alpha : alphas) {
    for (double sigma : sigmas) {
      const double closed = kPi / sigma * std::exp(-std::fabs(alpha) * sigma);
      const double tol = std::max(1e-11, 1e-9 * closed);
      const QuadratureOutcome out =
          zv::cosine_lorentzian_integral(alpha, sigma, tol);
      INFO("alpha=", alpha, " sigma=", sigma);
      CHECK(std::fabs(out.real() - closed) / closed <= 1e-8);
    }
  }
  CHECK_THROWS_AS(zv::cosine_lorentzian_integral(1.0, 0.0, 1e-8),
                  zv::DomainError);
}

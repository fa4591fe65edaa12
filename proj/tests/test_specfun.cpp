#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "su11/errors.hpp"
#include "su11/specfun.hpp"
#include "support.hpp"

using namespace su11;
using su11::testing::rel_err;
using su11::testing::uniform;
using std::numbers::pi;

namespace {

// Oracle: 200-term ascending series with std::lgamma for the prefactor.
double bessel_i_oracle(double nu, double x) {
  double sum = 0.0;
  for (int m = 0; m < 200; ++m) {
    const double lt = (2.0 * m + nu) * std::log(0.5 * x) - std::lgamma(m + 1.0) -
                      std::lgamma(m + nu + 1.0);
    const double sign = std::tgamma(m + nu + 1.0) < 0.0 ? -1.0 : 1.0;
    sum += sign * std::exp(lt);
  }
  return sum;
}

// Oracle: explicit finite sum of binomials.
cplx laguerre_oracle(int n, double alpha, cplx x) {
  cplx sum = 0.0;
  for (int m = 0; m <= n; ++m) {
    const double binom = std::tgamma(n + alpha + 1.0) /
                         (std::tgamma(n - m + 1.0) * std::tgamma(alpha + m + 1.0));
    sum += binom * std::pow(-x, m) / std::tgamma(m + 1.0);
  }
  return sum;
}

double beta_oracle(int n, double k) {
  return std::tgamma(n + 1.0) * std::tgamma(2.0 * k - 1.0) / std::tgamma(n + 2.0 * k);
}

}  // namespace

TEST(Gamma, Examples) {
  EXPECT_NEAR(gamma_fn(0.5).real(), std::sqrt(pi), 1e-13);
  EXPECT_NEAR(gamma_fn(5.0).real(), 24.0, 1e-11);
  EXPECT_THROW(gamma_fn(0.0), DomainError);
  EXPECT_THROW(gamma_fn(-3.0), DomainError);
}

TEST(Gamma, MatchesStdOnRealRange) {
  for (double x = 0.1; x <= 50.0; x += 0.37) {
    EXPECT_LT(rel_err(gamma_fn(x), std::tgamma(x)), 1e-12) << x;
  }
}

TEST(Gamma, RecurrenceProperty) {
  auto g = su11::testing::rng(11);
  for (int i = 0; i < 1000; ++i) {
    const double x = uniform(g, 0.1, 20.0);
    EXPECT_LT(rel_err(gamma_fn(x + 1.0), x * gamma_fn(x)), 1e-12) << x;
  }
}

TEST(Gamma, ComplexRecurrenceAndReflection) {
  auto g = su11::testing::rng(12);
  for (int i = 0; i < 200; ++i) {
    const cplx z(uniform(g, -5.0, 5.0), uniform(g, -3.0, 3.0));
    EXPECT_LT(rel_err(gamma_fn(z + 1.0), z * gamma_fn(z)), 1e-11) << z;
    EXPECT_LT(rel_err(gamma_fn(z) * gamma_fn(1.0 - z), pi / std::sin(pi * z)), 1e-11);
  }
}

TEST(LogGamma, MatchesStd) {
  for (double x = 0.01; x < 300.0; x *= 1.3) {
    EXPECT_NEAR(log_gamma(x), std::lgamma(x), 1e-12 * std::max(1.0, std::abs(std::lgamma(x))));
  }
}

TEST(BesselI, Examples) {
  EXPECT_DOUBLE_EQ(bessel_i(0.0, 0.0), 1.0);
  EXPECT_LT(rel_err(bessel_i(0.5, 1.0), std::sqrt(2.0 / pi) * std::sinh(1.0)), 1e-13);
  EXPECT_LT(rel_err(bessel_i(-0.5, 2.0), bessel_i_oracle(-0.5, 2.0)), 1e-12);
  EXPECT_LT(rel_err(bessel_i(-0.5, 2.0), std::cosh(2.0) / std::sqrt(pi)), 1e-12);
}

TEST(BesselI, AgreesWithStdAcrossRange) {
  for (double nu : {0.0, 0.3, 1.0, 2.5, 5.0}) {
    for (double x = 0.01; x <= 50.0; x *= 1.21) {
      EXPECT_LT(rel_err(bessel_i(nu, x), std::cyl_bessel_i(nu, x)), 1e-10)
          << nu << " " << x;
    }
  }
  for (double nu : {-0.9, -0.5, -0.25}) {
    for (double x = 0.01; x <= 50.0; x *= 1.21) {
      const double oracle = x < 20.0 ? bessel_i_oracle(nu, x)
                                     : std::cyl_bessel_i(-nu, x) +
                                           2.0 / pi * std::sin(-nu * pi) *
                                               std::cyl_bessel_k(-nu, x);
      EXPECT_LT(rel_err(bessel_i(nu, x), oracle), 1e-10) << nu << " " << x;
    }
  }
}

TEST(BesselK, Examples) {
  EXPECT_LT(rel_err(bessel_k(0.5, 1.0), std::sqrt(pi / 2.0) * std::exp(-1.0)), 1e-13);
  const double w = bessel_i(0.0, 1.0) * bessel_k(1.0, 1.0) +
                   bessel_i(1.0, 1.0) * bessel_k(0.0, 1.0);
  EXPECT_NEAR(w, 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(bessel_k(-0.5, 2.0), bessel_k(0.5, 2.0));
  EXPECT_THROW(bessel_k(0.5, 0.0), DomainError);
}

TEST(BesselK, WronskianProperty) {
  auto g = su11::testing::rng(21);
  for (int i = 0; i < 500; ++i) {
    const double nu = uniform(g, -0.9, 5.0);
    const double x = uniform(g, 0.1, 20.0);
    const double w = bessel_i(nu, x) * bessel_k(nu + 1.0, x) +
                     bessel_i(nu + 1.0, x) * bessel_k(nu, x);
    EXPECT_NEAR(w * x, 1.0, 1e-9) << nu << " " << x;
  }
}

TEST(Kummer, Examples) {
  EXPECT_EQ(kummer_phi(0.3, 1.7, 0.0), cplx(1.0));
  EXPECT_LT(rel_err(kummer_phi(1.0, 1.0, 1.0), std::exp(1.0)), 1e-13);
  EXPECT_NEAR(kummer_phi(-1.0, 2.0, 3.0).real(), -0.5, 1e-15);
  EXPECT_THROW(kummer_phi(1.0, -2.0, 1.0), DomainError);
}

TEST(Kummer, ClosedFormsOnWideRange) {
  // Phi(a; a; x) = e^x and Phi(1; 2; x) = (e^x - 1)/x
  for (double x = -30.0; x <= 30.0; x += 1.7) {
    EXPECT_LT(rel_err(kummer_phi(0.7, 0.7, x), std::exp(x)), 1e-9) << x;
    EXPECT_LT(rel_err(kummer_phi(1.0, 2.0, x), std::expm1(x) / x), 1e-9) << x;
  }
  const cplx z(3.0, -20.0);
  EXPECT_LT(rel_err(kummer_phi(1.0, 2.0, z), (std::exp(z) - 1.0) / z), 1e-9);
}

TEST(Kummer, ContiguousRecurrenceProperty) {
  auto g = su11::testing::rng(31);
  for (int i = 0; i < 300; ++i) {
    const cplx a(uniform(g, -3.0, 3.0), uniform(g, -2.0, 2.0));
    const cplx b(uniform(g, 0.2, 4.0), uniform(g, -1.0, 1.0));
    const cplx x(uniform(g, -10.0, 10.0), uniform(g, -10.0, 10.0));
    const cplx r = b * kummer_phi(a, b, x) - b * kummer_phi(a - 1.0, b, x) -
                   x * kummer_phi(a, b + 1.0, x);
    const double scale = std::abs(b * kummer_phi(a, b, x)) + std::abs(x * kummer_phi(a, b + 1.0, x));
    EXPECT_LT(std::abs(r), 1e-8 * std::max(1.0, scale)) << a << b << x;
  }
}

TEST(Kummer, ExhaustedTermsRaise) {
  SeriesControl ctl;
  ctl.max_terms = 3;
  EXPECT_THROW(kummer_phi(0.5, 1.5, 10.0, ctl), ConvergenceError);
  ctl.max_terms = 0;
  EXPECT_THROW(kummer_phi(0.5, 1.5, 1.0, ctl), DomainError);
}

TEST(Laguerre, Examples) {
  EXPECT_EQ(laguerre_assoc(0, 0.3, 2.0), cplx(1.0));
  EXPECT_NEAR(laguerre_assoc(1, 0.5, 2.0).real(), -0.5, 1e-15);
  EXPECT_LT(rel_err(laguerre_assoc(3, -0.5, 1.0), laguerre_oracle(3, -0.5, 1.0)), 1e-13);
}

TEST(Laguerre, RecurrenceAndOracleProperty) {
  auto g = su11::testing::rng(41);
  for (int i = 0; i < 200; ++i) {
    const int n = static_cast<int>(uniform(g, 1.0, 25.0));
    const double alpha = uniform(g, -0.9, 4.0);
    const cplx x(uniform(g, -5.0, 5.0), uniform(g, -5.0, 5.0));
    const cplx lhs = (n + 1.0) * laguerre_assoc(n + 1, alpha, x);
    const cplx rhs = (2.0 * n + 1.0 + alpha - x) * laguerre_assoc(n, alpha, x) -
                     (n + alpha) * laguerre_assoc(n - 1, alpha, x);
    EXPECT_LT(std::abs(lhs - rhs), 1e-10 * std::max(1.0, std::abs(lhs)));
    if (n <= 12) {
      EXPECT_LT(std::abs(laguerre_assoc(n, alpha, x) - laguerre_oracle(n, alpha, x)),
                1e-9 * std::max(1.0, std::abs(laguerre_oracle(n, alpha, x))));
    }
  }
}

TEST(BetaContour, Examples) {
  EXPECT_LT(rel_err(beta_contour_weight(0, 0.75), 2.0), 1e-8);
  EXPECT_LT(rel_err(beta_contour_weight(1, 0.25), beta_oracle(1, 0.25)), 1e-8);
  EXPECT_NEAR(beta_oracle(1, 0.25), -4.0, 1e-12);
  EXPECT_THROW(beta_contour_weight(2, 1.0), DomainError);
  EXPECT_THROW(beta_contour_weight(0, 0.5), DomainError);
  // approaching k = 1 from an allowed value reproduces B(3, 1) = 1/3
  EXPECT_NEAR(beta_contour_weight(2, 1.0 + 1e-6).real(), 1.0 / 3.0, 1e-5);
}

TEST(BetaContour, AnalyticContinuationProperty) {
  for (double k : {0.15, 0.25, 0.75, 1.3}) {
    for (int n = 0; n <= 20; ++n) {
      const cplx w = beta_contour_weight(n, k);
      EXPECT_LT(rel_err(w, beta_oracle(n, k)), 1e-8) << k << " " << n;
      EXPECT_LT(std::abs(w.imag()), 1e-8 * std::abs(w.real()));
    }
  }
}

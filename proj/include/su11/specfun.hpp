#pragma once

#include <complex>

#include "su11/quadrature.hpp"

namespace su11 {

/// Truncation policy for power series.  A series stops on the first term
/// below abs_tol or below rel_tol times the running sum.
struct SeriesControl {
  int max_terms = 500;
  double abs_tol = 1e-14;
  double rel_tol = 1e-12;

  void validate() const;
};

/// Gamma function on the complex plane (Lanczos, reflection for Re x < 1/2).
/// Throws DomainError at the poles x = 0, -1, -2, ...
std::complex<double> gamma_fn(std::complex<double> x);

/// log Gamma(x) for real x > 0.
double log_gamma(double x);

/// Modified Bessel function of the first kind I_nu(x), nu > -1, x >= 0.
double bessel_i(double nu, double x);

/// Modified Bessel function of the second kind K_nu(x), x > 0.
double bessel_k(double nu, double x);

/// Confluent hypergeometric function Phi(a; b; x) = 1F1(a; b; x).
/// Validated for |x| <= 30.
std::complex<double> kummer_phi(std::complex<double> a, std::complex<double> b,
                                std::complex<double> x,
                                const SeriesControl& ctl = {});

/// Associated Laguerre polynomial L_n^alpha(x) by the three-term recurrence.
std::complex<double> laguerre_assoc(int n, double alpha,
                                    std::complex<double> x);

/// Loop-integral form of the Beta function,
///
///   1 / (2i sin(pi (2k-1))) * \oint t^n (t-1)^{2k-2} dt,
///
/// over the keyhole contour of `quad`.  Equals B(n+1, 2k-1) by analytic
/// continuation in k.  Throws DomainError when 2k is an integer.
std::complex<double> beta_contour_weight(int n, double k,
                                         const QuadratureSpec& quad = {});

/// True when 2k is (numerically) an integer.
bool is_integer_or_half_integer(double k);

}  // namespace su11

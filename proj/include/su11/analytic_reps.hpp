#pragma once

#include <span>
#include <vector>

#include "su11/core.hpp"
#include "su11/quadrature.hpp"

namespace su11 {

/// Default starting truncation for state constructors.  Constructors double
/// it until |C_N|^2 < 1e-20 * norm, up to kMaxTruncation.
inline constexpr int kDefaultTruncation = 128;
inline constexpr int kMaxTruncation = 4096;
inline constexpr double kTailRatio = 1e-20;
/// Radius reported for exact finite expansions.
inline constexpr double kRadiusCap = 1e6;

/// A state together with a lower estimate of the convergence radius of its
/// unit-disk function G.  Membership in H(D(1+eps)) means radius >= 1+eps.
struct ExtendedDiskFunction {
  CoefficientState state;
  double radius_estimate;

  bool in_extended_disk(double eps) const { return radius_estimate >= 1.0 + eps; }
};

/// Root-test estimate 1 / max |C_n w_n|^{1/n} over the last 32 nonzero
/// terms, floored at 1.  Exact finite expansions report kRadiusCap and a
/// certified radius, when present, takes precedence.
double radius_estimate(const CoefficientState& s);
ExtendedDiskFunction extend(const CoefficientState& s);

/// Perelomov coherent state |zeta,k>, C_n = (1-|zeta|^2)^k w_n zeta^n.
CoefficientState perelomov_coefficients(cplx zeta, BargmannIndex k,
                                        int truncation = kDefaultTruncation);

/// Barut-Girardello state |z,k>, the normalized eigenstate K- |z> = z |z>.
CoefficientState bg_coefficients(cplx z, BargmannIndex k,
                                 int truncation = kDefaultTruncation);

/// Taylor coefficients C_n w_n of G.
std::vector<cplx> disk_taylor_coeffs(const CoefficientState& s);

/// sum a_n x^n by Horner's rule, no convergence checks.
cplx horner(std::span<const cplx> a, cplx x);

/// G(zeta) = sum C_n w_n zeta^n.
cplx eval_G(const CoefficientState& s, cplx zeta);

/// F(z) = sum C_n z^n / sqrt(n! Gamma(n+2k)).
cplx eval_F(const CoefficientState& s, cplx z);

/// Closed-form overlap <conj(zeta),k | z,k>.
cplx overlap_perelomov_bg(cplx zeta, cplx z, BargmannIndex k);

/// (conj(b) zeta + conj(a))^{-2k}, with the branch continuous from zeta = 0.
cplx mobius_multiplier(const GroupElement& g, cplx zeta, double k);

/// New state whose G is G(mobius_g(zeta)) (conj(b) zeta + conj(a))^{-2k}.
CoefficientState mobius_transform_G(const CoefficientState& s,
                                    const GroupElement& g);

/// G(1/rho) from the Laplace integral of z^{2k-1} F(z).  Re rho > 0, |rho| > 1.
cplx laplace_F_to_G(const CoefficientState& s, cplx rho,
                    const QuadratureSpec& quad = {});

/// F(z) from the inverse Laplace integral of rho^{-2k} G(1/rho).
cplx inverse_laplace_G_to_F(const CoefficientState& s, cplx z,
                            const QuadratureSpec& quad = {});

/// Transformed BG function via the Laguerre-polynomial law:
/// exp(-conj(b) z/conj(a)) conj(a)^{-2k} sum C_n (b/conj a)^n n! L_n^{2k-1}(-z/(conj(a) b)) / sqrt(n! Gamma(n+2k)).
/// Needs b != 0.
cplx bg_su11_transform(const CoefficientState& s, const GroupElement& g,
                       cplx z);

/// b = 0 limit of bg_su11_transform: conj(a)^{-2k} F(a z / conj(a)).
cplx bg_rotation_transform(const CoefficientState& s, const GroupElement& g,
                           cplx z);

/// Linear ODE sum_j p_j(x) y^{(j)}(x) = 0 with polynomial coefficients.
/// terms[j] holds p_j in ascending powers of x.
struct ODECoefficients {
  std::vector<std::vector<cplx>> terms;

  int order() const { return static_cast<int>(terms.size()) - 1; }
  cplx coefficient(int j, cplx x) const;

  /// sum_j p_j(x) y_j, where y_j is the j-th derivative at x.
  cplx residual(cplx x, std::span<const cplx> derivatives) const;
  /// sum_j |p_j(x) y_j|, the natural scale for a relative residual.
  double magnitude(cplx x, std::span<const cplx> derivatives) const;
};

/// Unit-disk form of (b1 K1 + b2 K2 + b3 K3) |lambda> = lambda |lambda>:
/// (b+ + b3 z + b- z^2) G' + (2k b- z + k b3 - lambda) G = 0,
/// with b+- = (b1 +- i b2)/2.
ODECoefficients build_eigen_ode_disk(cplx beta1, cplx beta2, cplx beta3,
                                     cplx lambda, BargmannIndex k);

/// Entire-function form of the same eigenvalue problem:
/// b+ z F'' + (b3 z + 2k b+) F' + (b- z + k b3 - lambda) F = 0.
ODECoefficients build_eigen_ode_bg(cplx beta1, cplx beta2, cplx beta3,
                                   cplx lambda, BargmannIndex k);

}  // namespace su11

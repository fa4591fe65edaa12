#pragma once

#include <vector>

#include <Eigen/Dense>

#include "su11/analytic_reps.hpp"
#include "su11/core.hpp"
#include "su11/quadrature.hpp"
#include "su11/resolutions.hpp"

namespace su11 {

/// Coefficients C_0..C_M over the full Fock basis |n>.
struct FullFockState {
  std::vector<cplx> coeffs;
  /// Squared weight pushed past the truncation by a raising operation.
  double truncation_loss = 0.0;

  std::size_t size() const noexcept { return coeffs.size(); }
  int truncation() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  cplx operator[](std::size_t n) const { return coeffs[n]; }
  double norm_squared() const noexcept;
  bool normalized() const noexcept;
  bool truncation_warning() const noexcept;
};

cplx inner(const FullFockState& a, const FullFockState& b);

/// Even part as a k = 1/4 state (C_n^e = C_2n), odd part as k = 3/4
/// (C_n^o = C_2n+1), with their weights Ne and No.
struct TwoPhotonSplit {
  CoefficientState even;
  CoefficientState odd;
  double Ne;
  double No;
};

TwoPhotonSplit split_even_odd(const FullFockState& psi);
FullFockState merge_even_odd(const TwoPhotonSplit& split);

/// Places a k = 1/4 (3/4) state on the even (odd) Fock levels.
FullFockState embed(const CoefficientState& s);

/// S(xi)|0>, the k = 1/4 coherent state with label zeta.  The truncation
/// is that of the sector state; it grows as the Perelomov state does.
FullFockState squeezed_vacuum(cplx zeta, int truncation = kDefaultTruncation);
/// S(xi)|1>, the k = 3/4 coherent state with label zeta.
FullFockState squeezed_one_photon(cplx zeta, int truncation = kDefaultTruncation);

enum class Parity { even, odd };

/// Normalized |alpha> + |-alpha> (even) or |alpha> - |-alpha> (odd).
/// The odd state needs |alpha| >= 1e-6.  A negative truncation grows the
/// Fock cutoff until the dropped tail is below 1e-20 of the norm.
FullFockState even_odd_coherent(cplx alpha, Parity parity, int truncation = -1);

/// pi^{1/4} [F_e(alpha^2/2) + (alpha/sqrt 2) F_o(alpha^2/2)], with F_e, F_o
/// the BG functions of the two components.
cplx bargmann_synthesis(const TwoPhotonSplit& split, cplx alpha);

/// Solutions of the BG-form eigenvalue equation in terms of Kummer's
/// function, evaluated at z = alpha^2/2 with b+ = (b1 + i b2)/2 and
/// D = sqrt(b3^2 - b1^2 - b2^2):
///   even: exp((D - b3) z / (2 b+)) Phi(k - lambda/D; 2k; -D z / b+)
///   odd:  the same times (2z)^{1-2k}, with k -> 1 - k inside Phi.
cplx kummer_eigen_solution(cplx beta1, cplx beta2, cplx beta3, cplx lambda,
                           BargmannIndex k, Parity branch, cplx z);

enum class Generator { k_plus, k_minus, k3 };

/// Displaced two-photon generators: K+(eta) = (a^dag - conj eta)^2 / 2,
/// K-(eta) = (a - eta)^2 / 2, K3(eta) = (a^dag - conj eta)(a - eta)/2 + 1/4.
FullFockState displaced_generator_apply(Generator which, cplx eta,
                                        const FullFockState& psi);

struct HamiltonianParams {
  double omega;
  cplx g;
  cplx f;

  /// Throws DomainError unless omega > 0.
  void validate() const;
  /// True when omega > |g|, where the spectrum is discrete.
  bool discrete() const;
};

struct SpectrumLevel {
  int l;
  double k;
  int n;  // Fock label 2l + 2k - 1/2
  double energy;
};

struct SpectrumResult {
  std::vector<SpectrumLevel> levels;  // ascending in energy
  cplx eta;
  double delta;
  cplx chi;
  double s;
  double theta;
  double gap;  // 2 sqrt(omega^2 - |g|^2)
};

/// Closed-form levels E_l(k) = 2 Delta (k + l) - delta for k = 1/4, 3/4 and
/// l = 0..l_max.  RegimeError when omega <= |g|.
SpectrumResult spectrum_analytic(const HamiltonianParams& h, int l_max);

struct SqueezeParams {
  double s;
  double theta;
  cplx eta;
};

/// Solves omega/Delta = cosh s, g/Delta = -sinh s e^{i theta} and
/// f/Delta = sinh s e^{i theta} conj(eta) - cosh s eta.
SqueezeParams params_to_squeeze(const HamiltonianParams& h);

/// Displaced-basis coefficients of the eigenstate (l, k): G_D proportional
/// to (zeta + chi)^l (1 + conj(chi) zeta)^{-2k-l}, normalized with C_0 (or
/// the first nonzero coefficient) real positive.  Certified radius 1/|chi|.
CoefficientState eigenfunction_GD(const HamiltonianParams& h, int l,
                                  BargmannIndex k,
                                  int truncation = kDefaultTruncation);

/// Dense Fock-basis matrix of omega(a^dag a + 1/2) + (g/2) a^dag^2 +
/// (conj g/2) a^2 + f a^dag + conj(f) a on levels 0..M.
Eigen::MatrixXcd hamiltonian_matrix(const HamiltonianParams& h, int M);

struct FockEigensystem {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXcd vectors;  // columns
};

FockEigensystem brute_force_eigensystem(const HamiltonianParams& h, int M);
std::vector<double> brute_force_spectrum(const HamiltonianParams& h, int M);

/// exp(eta a^dag - conj(eta) a) on levels 0..M, computed on M + 32 levels
/// and cut back.
Eigen::MatrixXcd displacement_matrix(cplx eta, int M);
/// exp(xi a^dag^2 / 2 - conj(xi) a^2 / 2), same truncation policy.
Eigen::MatrixXcd squeeze_matrix(cplx xi, int M);

FullFockState apply(const Eigen::MatrixXcd& op, const FullFockState& psi);

/// Contour resolutions on the full Fock space: the k = 1/4 loop with
/// prefactor 1/(8 pi) plus the k = 3/4 loop with -1/(8 pi), conjugated by
/// D(eta).  Reports the first M levels against the identity; the k field
/// holds the even-sector index 1/4.
IdentityReport squeezed_resolution_check(int M, cplx eta = 0.0,
                                         const QuadratureSpec& quad = {},
                                         Exec exec = Exec::parallel);

}  // namespace su11

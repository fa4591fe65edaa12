#pragma once

#include <optional>
#include <vector>

#include "su11/analytic_reps.hpp"
#include "su11/core.hpp"
#include "su11/quadrature.hpp"

namespace su11 {

/// Serial reference or OpenMP evaluation of quadrature nodes.  Both paths
/// reduce per-node partial sums in node order, so results are bit-identical.
enum class Exec { serial, parallel };

struct IdentityReport {
  BargmannIndex k;
  int dimension_checked;
  double max_offdiag;
  double max_diag_error;
  /// Row-major dimension x dimension matrix <m| resolution |n>.
  std::vector<cplx> matrix;
  /// Contour checks only: |computed <0|I|0> - 1|, which tests the loop
  /// prefactor and branch against B(1, 2k-1).
  std::optional<double> phase_selftest;

  cplx at(int m, int n) const { return matrix[m * dimension_checked + n]; }
};

/// Disk measure ((2k-1)/pi) d^2 zeta / (1-|zeta|^2)^2 against Perelomov
/// states.  Needs k > 1/2.
IdentityReport disk_identity_check(BargmannIndex k, int M,
                                   const QuadratureSpec& quad = {},
                                   Exec exec = Exec::parallel);

/// Plane measure (2/pi) K_{2k-1}(2|z|) I_{2k-1}(2|z|) d^2 z against BG states.
IdentityReport bg_identity_check(BargmannIndex k, int M,
                                 const QuadratureSpec& quad = {},
                                 Exec exec = Exec::parallel);

/// -(2k-1) e^{2 pi i k} / (4 pi i sin 2 pi k), the loop prefactor.
cplx weak_prefactor(double k);

/// Scalar product as a loop integral in t = |zeta|^2 around t = 1, with
/// conj(zeta) continued as sqrt(t) e^{-i phi}.  Both functions must
/// converge beyond |zeta| = sqrt(1 + r).
cplx weak_scalar_product(const ExtendedDiskFunction& s1,
                         const ExtendedDiskFunction& s2,
                         const QuadratureSpec& quad = {},
                         Exec exec = Exec::parallel);

/// Row-major M x M matrix of prefactor * loop integral of |zeta,k><zeta,k|
/// with the unnormalized states and measure (1-t)^{2k-2} dt dphi.
std::vector<cplx> contour_projector_matrix(double k, int M, cplx prefactor,
                                           const QuadratureSpec& quad = {},
                                           Exec exec = Exec::parallel);

/// |2 pi prefactor loop (1-t)^{2k-2} dt - 1|.
double contour_selftest(double k, cplx prefactor, const QuadratureSpec& quad = {});

/// Max off-diagonal and diagonal deviations of a row-major M x M matrix
/// from the identity.
IdentityReport identity_report(BargmannIndex k, int M, std::vector<cplx> matrix,
                               std::optional<double> phase_selftest = std::nullopt);

/// Identity matrix elements from the same loop integral applied to
/// coherent-state projectors.  Needs 2k not an integer.
IdentityReport weak_identity_check(BargmannIndex k, int M,
                                   const QuadratureSpec& quad = {},
                                   Exec exec = Exec::parallel);

}  // namespace su11

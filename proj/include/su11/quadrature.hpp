#pragma once

#include <complex>
#include <vector>

namespace su11 {

/// Discretization of the disk, half-line, plane and keyhole-contour
/// integrals used by the identity-resolution checks.
struct QuadratureSpec {
  int radial_nodes = 32;         // Gauss-Legendre nodes per radial panel
  int angular_nodes = 256;       // trapezoid nodes for the angle integral
  double contour_radius = 0.4;   // radius of the circle around t = 1
  int segment_nodes = 256;       // Gauss-Legendre nodes per contour piece
  double plane_cutoff = 60.0;    // radial cutoff for whole-plane integrals

  /// Throws DomainError if any invariant is violated.
  void validate() const;
};

struct QuadNode {
  double x;
  double w;
};

/// n-point Gauss-Legendre rule on [a, b].
std::vector<QuadNode> gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// Composite Gauss-Legendre rule on [0, length] whose panels shrink
/// geometrically toward x = 0.  Nodes are returned as distances from that
/// endpoint, so callers can integrate algebraic singularities at either end
/// without forming 1 - x in floating point.
std::vector<QuadNode> graded_gauss_legendre(double length, int nodes_per_panel,
                                            double ratio = 0.15,
                                            double smallest = 1e-32);

/// One node of the keyhole contour around t = 1.
///
/// The contour runs from t = 0 to 1 - r below the cut (arg(t-1) = -pi),
/// counter-clockwise around the circle |t - 1| = r, and back to t = 0 above
/// the cut (arg(t-1) = +pi).  `dt` already contains the quadrature weight.
struct ContourNode {
  std::complex<double> t;
  std::complex<double> dt;
  double abs_tm1;  // |t - 1|
  double arg_tm1;  // arg(t - 1) on the branch |arg| <= pi
};

std::vector<ContourNode> keyhole_contour(double radius, int segment_nodes);

/// (t - 1)^p on the contour branch.
std::complex<double> pow_t_minus_1(const ContourNode& node, double p);

/// (1 - t)^p continued along the contour with arg(1 - t) = arg(t - 1) - pi.
std::complex<double> pow_1_minus_t(const ContourNode& node, double p);

}  // namespace su11

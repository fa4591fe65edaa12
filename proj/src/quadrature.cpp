#include "su11/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "su11/errors.hpp"

namespace su11 {

using cd = std::complex<double>;
using std::numbers::pi;

void QuadratureSpec::validate() const {
  if (radial_nodes < 8 || angular_nodes < 8 || segment_nodes < 8) {
    throw DomainError("quadrature node counts must be at least 8");
  }
  if (!(contour_radius > 0.0 && contour_radius < 1.0)) {
    throw DomainError("contour radius must lie in (0, 1)");
  }
  if (!(plane_cutoff > 0.0)) {
    throw DomainError("plane cutoff must be positive");
  }
}

std::vector<QuadNode> gauss_legendre(int n, double a, double b) {
  if (n < 1) throw DomainError("Gauss-Legendre rule needs n >= 1");
  std::vector<QuadNode> nodes(n);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      // p1 = P_n(x), p0 = P_{n-1}(x)
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    {
      // recompute the derivative at the converged root
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = {mid - half * x, half * w};
    nodes[n - 1 - i] = {mid + half * x, half * w};
  }
  return nodes;
}

std::vector<QuadNode> graded_gauss_legendre(double length, int nodes_per_panel,
                                            double ratio, double smallest) {
  const auto ref = gauss_legendre(nodes_per_panel);
  std::vector<QuadNode> out;
  double hi = length;
  while (true) {
    const double lo = hi * ratio;
    const bool last = lo < smallest * length;
    const double a = last ? 0.0 : lo;
    const double half = 0.5 * (hi - a);
    const double mid = 0.5 * (hi + a);
    for (const auto& q : ref) out.push_back({mid + half * q.x, half * q.w});
    if (last) break;
    hi = lo;
  }
  return out;
}

std::vector<ContourNode> keyhole_contour(double radius, int segment_nodes) {
  std::vector<ContourNode> out;
  out.reserve(3 * segment_nodes);
  const auto seg = gauss_legendre(segment_nodes, 0.0, 1.0 - radius);
  for (const auto& q : seg) {
    out.push_back({cd(q.x, 0.0), cd(q.w, 0.0), 1.0 - q.x, -pi});
  }
  const auto circ = gauss_legendre(segment_nodes, -pi, pi);
  for (const auto& q : circ) {
    const cd e = std::polar(1.0, q.x);
    out.push_back({1.0 + radius * e, cd(0.0, 1.0) * radius * e * q.w, radius,
                   q.x});
  }
  for (auto it = seg.rbegin(); it != seg.rend(); ++it) {
    out.push_back({cd(it->x, 0.0), cd(-it->w, 0.0), 1.0 - it->x, pi});
  }
  return out;
}

cd pow_t_minus_1(const ContourNode& node, double p) {
  return std::polar(std::pow(node.abs_tm1, p), p * node.arg_tm1);
}

cd pow_1_minus_t(const ContourNode& node, double p) {
  return std::polar(std::pow(node.abs_tm1, p), p * (node.arg_tm1 - pi));
}

}  // namespace su11

#include "su11/resolutions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "su11/errors.hpp"
#include "su11/specfun.hpp"

namespace su11 {

using std::numbers::pi;

namespace {

// Evaluates partial(i, out) for every node and sums the partials in node
// order.  `width` is the length of each partial.
template <typename Partial>
std::vector<cplx> reduce_nodes(std::size_t nodes, std::size_t width,
                               Exec exec, Partial partial) {
  std::vector<cplx> parts(nodes * width, 0.0);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(nodes); ++i) {
      partial(static_cast<std::size_t>(i), parts.data() + i * width);
    }
  } else {
    for (std::size_t i = 0; i < nodes; ++i) partial(i, parts.data() + i * width);
  }
  std::vector<cplx> total(width, 0.0);
  for (std::size_t i = 0; i < nodes; ++i) {
    for (std::size_t j = 0; j < width; ++j) total[j] += parts[i * width + j];
  }
  return total;
}

void check_dimension(int M) {
  if (M < 1) throw DomainError("identity check needs M >= 1");
}

// Adds w * v_m conj(u_n) to an M x M block.
void add_outer(cplx* out, int M, cplx w, const std::vector<cplx>& v,
               const std::vector<cplx>& u) {
  for (int m = 0; m < M; ++m) {
    const cplx wm = w * v[m];
    for (int n = 0; n < M; ++n) out[m * M + n] += wm * std::conj(u[n]);
  }
}

}  // namespace

IdentityReport disk_identity_check(BargmannIndex k, int M,
                                   const QuadratureSpec& quad, Exec exec) {
  quad.validate();
  check_dimension(M);
  const double kv = k.value();
  if (!(kv > 0.5)) {
    throw DomainError(
        "disk resolution needs k > 1/2 (the measure is not normalizable at "
        "k <= 1/2); use the weak check instead");
  }
  const auto w = disk_weights(kv, M - 1);
  // radial variable s = 1 - |zeta|^2, graded toward the rim
  const auto radial = graded_gauss_legendre(1.0, quad.radial_nodes);
  const int na = quad.angular_nodes;
  const double wphi = 2.0 * pi / na;

  auto partial = [&](std::size_t i, cplx* out) {
    const double s = radial[i].x;
    const double t = 1.0 - s;
    // d^2 zeta = dt dphi / 2; (1-t)^{2k} from the two states over (1-t)^2
    const double wr = radial[i].w * 0.5 * (2.0 * kv - 1.0) / pi * std::pow(s, 2.0 * kv - 2.0);
    std::vector<cplx> v(M);
    for (int j = 0; j < na; ++j) {
      const cplx zeta = std::polar(std::sqrt(t), j * wphi);
      cplx p = 1.0;
      for (int m = 0; m < M; ++m) {
        v[m] = w[m] * p;
        p *= zeta;
      }
      add_outer(out, M, wr * wphi, v, v);
    }
  };
  return identity_report(k, M, reduce_nodes(radial.size(), M * M, exec, partial));
}

IdentityReport bg_identity_check(BargmannIndex k, int M,
                                 const QuadratureSpec& quad, Exec exec) {
  quad.validate();
  check_dimension(M);
  const double kv = k.value();
  const double nu = 2.0 * kv - 1.0;
  const double R = quad.plane_cutoff;
  const auto v = bg_weights(kv, M - 1);

  auto radial_density = [&](double r) {
    // diagonal integrand of the top level at radius r, angle integrated
    const int n = M - 1;
    return 4.0 * bessel_k(nu, 2.0 * r) * std::pow(r, nu + 2.0 * n + 1.0) * v[n] * v[n];
  };
  std::vector<QuadNode> radial = graded_gauss_legendre(std::min(1.0, R), quad.radial_nodes);
  for (double a = 1.0; a < R; a += 1.0) {
    for (const auto& q : gauss_legendre(quad.radial_nodes, a, std::min(a + 1.0, R))) {
      radial.push_back(q);
    }
  }
  double mass = 0.0;
  for (const auto& q : radial) mass += q.w * radial_density(q.x);
  if (radial_density(R) > 1e-10 * std::max(mass, 1e-300)) {
    throw ConvergenceError("bg identity check: plane cutoff " + std::to_string(R) +
                           " is too small for M = " + std::to_string(M));
  }

  const int na = quad.angular_nodes;
  const double wphi = 2.0 * pi / na;
  auto partial = [&](std::size_t i, cplx* out) {
    const double r = radial[i].x;
    const double inu = bessel_i(nu, 2.0 * r);
    const double wr = radial[i].w * r * (2.0 / pi) * bessel_k(nu, 2.0 * r) * inu;
    std::vector<cplx> c(M);
    for (int j = 0; j < na; ++j) {
      const cplx z = std::polar(r, j * wphi);
      cplx p = std::pow(z, kv - 0.5) / std::sqrt(inu);
      for (int m = 0; m < M; ++m) {
        c[m] = v[m] * p;
        p *= z;
      }
      add_outer(out, M, wr * wphi, c, c);
    }
  };
  return identity_report(k, M, reduce_nodes(radial.size(), M * M, exec, partial));
}

cplx weak_prefactor(double k) {
  return -(2.0 * k - 1.0) * std::polar(1.0, 2.0 * pi * k) /
         (cplx(0.0, 4.0 * pi) * std::sin(2.0 * pi * k));
}

namespace {

void check_weak_k(double k) {
  if (is_integer_or_half_integer(k)) {
    throw DomainError("weak resolution needs 2k not an integer (k = " +
                      std::to_string(k) + ")");
  }
}

}  // namespace

cplx weak_scalar_product(const ExtendedDiskFunction& s1,
                         const ExtendedDiskFunction& s2,
                         const QuadratureSpec& quad, Exec exec) {
  quad.validate();
  if (!(s1.state.k() == s2.state.k())) {
    throw DomainError("weak scalar product: states belong to different k");
  }
  const double k = s1.state.k().value();
  check_weak_k(k);
  const double reach = std::sqrt(1.0 + quad.contour_radius);
  if (std::min(s1.radius_estimate, s2.radius_estimate) <= reach) {
    throw DomainError("weak scalar product: contour reaches |zeta| = " +
                      std::to_string(reach) + ", beyond the convergence disk");
  }
  const auto contour = keyhole_contour(quad.contour_radius, quad.segment_nodes);
  const int na = quad.angular_nodes;
  const double wphi = 2.0 * pi / na;
  const cplx pref = weak_prefactor(k);
  const auto a1 = disk_taylor_coeffs(s1.state);
  const auto a2 = disk_taylor_coeffs(s2.state);

  auto partial = [&](std::size_t i, cplx* out) {
    const auto& node = contour[i];
    const cplx rt = std::sqrt(node.t);
    cplx acc = 0.0;
    for (int j = 0; j < na; ++j) {
      const cplx e = std::polar(1.0, j * wphi);
      // conj(G_1) continued off the real t axis
      const cplx g1 = std::conj(horner(a1, std::conj(rt) * e));
      acc += g1 * horner(a2, rt * e);
    }
    out[0] = pref * node.dt * pow_1_minus_t(node, 2.0 * k - 2.0) * wphi * acc;
  };
  return reduce_nodes(contour.size(), 1, exec, partial)[0];
}

std::vector<cplx> contour_projector_matrix(double k, int M, cplx prefactor,
                                           const QuadratureSpec& quad, Exec exec) {
  quad.validate();
  check_dimension(M);
  const auto w = disk_weights(k, M - 1);
  const auto contour = keyhole_contour(quad.contour_radius, quad.segment_nodes);
  const int na = quad.angular_nodes;
  const double wphi = 2.0 * pi / na;

  auto partial = [&](std::size_t i, cplx* out) {
    const auto& node = contour[i];
    const cplx rt = std::sqrt(node.t);
    const cplx wt = prefactor * node.dt * pow_1_minus_t(node, 2.0 * k - 2.0) * wphi;
    std::vector<cplx> v(M);
    std::vector<cplx> u(M);
    for (int j = 0; j < na; ++j) {
      const cplx e = std::polar(1.0, j * wphi);
      // <m|zeta> and the continuation of conj(<n|zeta>)
      cplx p = 1.0;
      cplx q = 1.0;
      for (int m = 0; m < M; ++m) {
        v[m] = w[m] * p;
        u[m] = w[m] * std::conj(q);
        p *= rt * e;
        q *= rt * std::conj(e);
      }
      add_outer(out, M, wt, v, u);
    }
  };
  return reduce_nodes(contour.size(), M * M, exec, partial);
}

double contour_selftest(double k, cplx prefactor, const QuadratureSpec& quad) {
  quad.validate();
  cplx loop = 0.0;
  for (const auto& node : keyhole_contour(quad.contour_radius, quad.segment_nodes)) {
    loop += node.dt * pow_1_minus_t(node, 2.0 * k - 2.0);
  }
  return std::abs(2.0 * pi * prefactor * loop - 1.0);
}

IdentityReport identity_report(BargmannIndex k, int M, std::vector<cplx> mat,
                               std::optional<double> selftest) {
  double off = 0.0;
  double diag = 0.0;
  for (int m = 0; m < M; ++m) {
    for (int n = 0; n < M; ++n) {
      const cplx v = mat[m * M + n];
      if (m == n) {
        diag = std::max(diag, std::abs(v - 1.0));
      } else {
        off = std::max(off, std::abs(v));
      }
    }
  }
  return {k, M, off, diag, std::move(mat), selftest};
}

IdentityReport weak_identity_check(BargmannIndex k, int M,
                                   const QuadratureSpec& quad, Exec exec) {
  const double kv = k.value();
  check_weak_k(kv);
  const cplx pref = weak_prefactor(kv);
  return identity_report(k, M, contour_projector_matrix(kv, M, pref, quad, exec),
                         contour_selftest(kv, pref, quad));
}

}  // namespace su11

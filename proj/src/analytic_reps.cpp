#include "su11/analytic_reps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "su11/errors.hpp"
#include "su11/specfun.hpp"

namespace su11 {

using std::numbers::pi;

namespace {

bool tail_ok(std::span<const cplx> c) {
  double total = 0.0;
  for (const auto& x : c) total += std::norm(x);
  return std::norm(c.back()) <= kTailRatio * total;
}

// Runs build(N) with N doubling until the tail invariant holds.
template <typename Build>
CoefficientState grow_until_tail(BargmannIndex k, int truncation, Build build) {
  int n = std::max(truncation, 1);
  while (true) {
    std::vector<cplx> c = build(n);
    if (tail_ok(c)) return {k, std::move(c), SeriesKind::truncated};
    if (n >= kMaxTruncation) {
      throw ConvergenceError("state needs truncation beyond " +
                             std::to_string(kMaxTruncation));
    }
    n = std::min(2 * n, kMaxTruncation);
  }
}

// Sum of |a_n zeta^n| over the series; used to scale tail checks.
struct SeriesValue {
  cplx sum;
  double last_term;
  double scale;
};

SeriesValue disk_series(const CoefficientState& s, cplx zeta) {
  const auto w = disk_weights(s.k().value(), s.truncation());
  cplx sum = 0.0;
  cplx p = 1.0;
  double scale = 0.0;
  double last = 0.0;
  for (std::size_t n = 0; n < s.size(); ++n) {
    const cplx t = s[n] * w[n] * p;
    sum += t;
    scale += std::abs(t);
    last = std::abs(t);
    p *= zeta;
  }
  return {sum, last, scale};
}

}  // namespace

double radius_estimate(const CoefficientState& s) {
  if (s.certified_radius()) return std::min(*s.certified_radius(), kRadiusCap);
  if (s.kind() == SeriesKind::exact) return kRadiusCap;
  const auto w = disk_weights(s.k().value(), s.truncation());
  double worst = 0.0;
  int seen = 0;
  for (int n = s.truncation(); n >= 1 && seen < 32; --n) {
    const double a = std::abs(s[n]) * w[n];
    if (a == 0.0) continue;
    ++seen;
    worst = std::max(worst, std::pow(a, 1.0 / n));
  }
  if (seen == 0 || worst == 0.0) return kRadiusCap;
  return std::clamp(1.0 / worst, 1.0, kRadiusCap);
}

ExtendedDiskFunction extend(const CoefficientState& s) {
  return {s, radius_estimate(s)};
}

CoefficientState perelomov_coefficients(cplx zeta, BargmannIndex k,
                                        int truncation) {
  const double r2 = std::norm(zeta);
  if (!(r2 < 1.0)) throw DomainError("Perelomov state needs |zeta| < 1");
  if (zeta == 0.0) return CoefficientState::basis(k, 0, std::max(truncation, 0));
  const double kv = k.value();
  const double pref = std::pow(1.0 - r2, kv);
  return grow_until_tail(k, truncation, [&](int n) {
    const auto w = disk_weights(kv, n);
    std::vector<cplx> c(n + 1);
    cplx p = 1.0;
    for (int i = 0; i <= n; ++i) {
      c[i] = pref * w[i] * p;
      p *= zeta;
    }
    return c;
  });
}

CoefficientState bg_coefficients(cplx z, BargmannIndex k, int truncation) {
  if (z == 0.0) return CoefficientState::basis(k, 0, std::max(truncation, 0));
  const double kv = k.value();
  const double az = std::abs(z);
  const cplx pref =
      std::pow(z, kv - 0.5) / std::sqrt(bessel_i(2.0 * kv - 1.0, 2.0 * az));
  return grow_until_tail(k, truncation, [&](int n) {
    std::vector<cplx> c(n + 1);
    c[0] = pref * std::exp(-0.5 * log_gamma(2.0 * kv));
    for (int i = 1; i <= n; ++i) {
      c[i] = c[i - 1] * z / std::sqrt(i * (i - 1.0 + 2.0 * kv));
    }
    return c;
  });
}

std::vector<cplx> disk_taylor_coeffs(const CoefficientState& s) {
  const auto w = disk_weights(s.k().value(), s.truncation());
  std::vector<cplx> a(s.size());
  for (std::size_t n = 0; n < s.size(); ++n) a[n] = s[n] * w[n];
  return a;
}

cplx horner(std::span<const cplx> a, cplx x) {
  cplx v = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * x + *it;
  return v;
}

cplx eval_G(const CoefficientState& s, cplx zeta) {
  const double r = radius_estimate(s);
  if (std::abs(zeta) >= r) {
    throw ConvergenceError("eval_G: point outside the estimated convergence disk");
  }
  const auto v = disk_series(s, zeta);
  if (s.kind() == SeriesKind::truncated) {
    const double q = std::abs(zeta) / r;
    const double tail = v.last_term * q / (1.0 - q);
    if (tail > 1e-6 * v.scale) {
      throw ConvergenceError("eval_G: truncated series tail too large at this point");
    }
  }
  return v.sum;
}

cplx eval_F(const CoefficientState& s, cplx z) {
  const auto v = bg_weights(s.k().value(), s.truncation());
  cplx sum = 0.0;
  cplx p = 1.0;
  for (std::size_t n = 0; n < s.size(); ++n) {
    sum += s[n] * v[n] * p;
    p *= z;
  }
  return sum;
}

cplx overlap_perelomov_bg(cplx zeta, cplx z, BargmannIndex k) {
  const double kv = k.value();
  if (!(std::norm(zeta) < 1.0)) throw DomainError("overlap needs |zeta| < 1");
  if (z == 0.0) {
    if (kv < 0.5) throw DomainError("overlap: z^{k-1/2} is singular at z = 0 for k < 1/2");
    // BG state at z = 0 is |0,k>
    return std::pow(1.0 - std::norm(zeta), kv);
  }
  const cplx pref = std::pow(z, kv - 0.5) * std::pow(1.0 - std::norm(zeta), kv) /
                    std::sqrt(bessel_i(2.0 * kv - 1.0, 2.0 * std::abs(z)) *
                              std::exp(log_gamma(2.0 * kv)));
  return pref * std::exp(z * zeta);
}

cplx mobius_multiplier(const GroupElement& g, cplx zeta, double k) {
  const cplx ac = std::conj(g.a());
  const cplx bc = std::conj(g.b());
  return std::pow(ac, -2.0 * k) * std::pow(1.0 + bc / ac * zeta, -2.0 * k);
}

CoefficientState mobius_transform_G(const CoefficientState& s,
                                    const GroupElement& g) {
  const double k = s.k().value();
  const cplx a = g.a();
  const cplx ac = std::conj(a);
  if (std::abs(g.b()) < 1e-15) {
    // rotation subgroup: C_n -> C_n (a / conj a)^n conj(a)^{-2k}
    std::vector<cplx> c(s.coeffs().begin(), s.coeffs().end());
    const cplx phase = a / ac;
    cplx p = std::pow(ac, -2.0 * k);
    for (auto& x : c) {
      x *= p;
      p *= phase;
    }
    CoefficientState out{s.k(), std::move(c), s.kind()};
    return s.certified_radius() ? out.with_certified_radius(*s.certified_radius())
                                : out;
  }

  // Sampling radius: as large as possible (at most 1) with the Mobius image
  // of the circle kept inside the convergence disk of the input.
  const double R = radius_estimate(s);
  const double limit = std::min(1.0, R / 1.1);
  auto image_max = [&](double rho) {
    double m = 0.0;
    for (int j = 0; j < 256; ++j) {
      m = std::max(m, std::abs(g.mobius(std::polar(rho, 2.0 * pi * j / 256))));
    }
    return m;
  };
  double rho = 1.0;
  if (R < 1.1) {
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      (image_max(mid) < limit ? lo : hi) = mid;
    }
    rho = lo;
  }
  if (rho < 0.25) {
    throw DomainError("mobius_transform_G: Mobius image leaves the convergence disk");
  }

  const auto taylor = disk_taylor_coeffs(s);
  int n_out = std::max(s.truncation(), 32);
  while (true) {
    const int samples = 4 * (n_out + 1);
    std::vector<cplx> f(samples);
    std::vector<cplx> rot(samples);
    for (int j = 0; j < samples; ++j) {
      const double theta = 2.0 * pi * j / samples;
      const cplx zeta = std::polar(rho, theta);
      f[j] = horner(taylor, g.mobius(zeta)) * mobius_multiplier(g, zeta, k);
      rot[j] = std::polar(1.0, -theta);
    }
    const auto w = disk_weights(k, n_out);
    std::vector<cplx> c(n_out + 1, 0.0);
    std::vector<cplx> p(samples, 1.0);
    double rho_n = 1.0;
    for (int n = 0; n <= n_out; ++n) {
      cplx acc = 0.0;
      for (int j = 0; j < samples; ++j) {
        acc += f[j] * p[j];
        p[j] *= rot[j];
      }
      c[n] = acc / (static_cast<double>(samples) * rho_n * w[n]);
      rho_n *= rho;
    }
    if (tail_ok(c)) return {s.k(), std::move(c), SeriesKind::truncated};
    if (n_out >= kMaxTruncation) {
      throw ConvergenceError("mobius_transform_G: transformed series does not settle");
    }
    n_out = std::min(2 * n_out, kMaxTruncation);
  }
}

cplx laplace_F_to_G(const CoefficientState& s, cplx rho,
                    const QuadratureSpec& quad) {
  quad.validate();
  if (!(rho.real() > 0.0) || !(std::abs(rho) > 1.0)) {
    throw DomainError("laplace_F_to_G needs Re rho > 0 and |rho| > 1");
  }
  const double k = s.k().value();
  const double h = 1.0 / rho.real();
  auto integrand = [&](double z) {
    return std::pow(z, 2.0 * k - 1.0) * eval_F(s, z) * std::exp(-rho * z);
  };

  // Graded panels resolve z^{2k-1} at the origin; uniform panels follow
  // until the integrand has decayed.
  cplx acc = 0.0;
  for (const auto& q : graded_gauss_legendre(h, quad.radial_nodes)) {
    acc += q.w * integrand(q.x);
  }
  const auto panel = gauss_legendre(quad.radial_nodes, 0.0, h);
  double peak = 0.0;
  int quiet = 0;
  for (int j = 1; j < 20000; ++j) {
    const double a = j * h;
    double panel_max = 0.0;
    for (const auto& q : panel) {
      const cplx v = integrand(a + q.x);
      acc += q.w * v;
      panel_max = std::max(panel_max, std::abs(v));
    }
    peak = std::max(peak, panel_max);
    quiet = panel_max < 1e-18 * peak ? quiet + 1 : 0;
    if (quiet >= 3) {
      return std::pow(rho, 2.0 * k) * std::exp(-0.5 * log_gamma(2.0 * k)) * acc;
    }
  }
  throw ConvergenceError("laplace_F_to_G: integrand did not decay");
}

cplx inverse_laplace_G_to_F(const CoefficientState& s, cplx z,
                            const QuadratureSpec& quad) {
  quad.validate();
  const double k = s.k().value();
  if (z == 0.0 && k < 0.5) {
    throw DomainError("inverse_laplace_G_to_F: z^{1-2k} is singular at z = 0 for k < 1/2");
  }
  // With w = rho z the Bromwich line deforms onto a Hankel contour around
  // the negative w axis: F(z) = sqrt(Gamma(2k)) (1/2 pi i) \int w^{-2k}
  // G(z/w) e^w dw.  The circle radius keeps |z/w| <= 0.8.
  const double r0 = std::max(1.0, 1.25 * std::abs(z));
  const double length = 50.0;
  const int panels = 50;
  const auto panel = gauss_legendre(quad.radial_nodes, 0.0, length / panels);
  const auto circle = gauss_legendre(quad.segment_nodes, -pi, pi);
  const double kk = 2.0 * k;
  const auto taylor = disk_taylor_coeffs(s);

  auto term = [&](double modulus, double arg, cplx dw) {
    const cplx w = std::polar(modulus, arg);
    const cplx wpow = std::polar(std::pow(modulus, -kk), -kk * arg);
    return wpow * horner(taylor, z / w) * std::exp(w) * dw;
  };

  cplx acc = 0.0;
  // lower edge, arg w = -pi, traversed from -infinity toward -r0
  for (int p = panels - 1; p >= 0; --p) {
    for (auto it = panel.rbegin(); it != panel.rend(); ++it) {
      const double m = r0 + p * (length / panels) + it->x;
      acc += term(m, -pi, cplx(it->w, 0.0));
    }
  }
  for (const auto& q : circle) {
    acc += term(r0, q.x, cplx(0.0, 1.0) * std::polar(r0, q.x) * q.w);
  }
  // upper edge, arg w = +pi, back out to -infinity
  for (int p = 0; p < panels; ++p) {
    for (const auto& q : panel) {
      const double m = r0 + p * (length / panels) + q.x;
      acc += term(m, pi, cplx(-q.w, 0.0));
    }
  }
  return std::exp(0.5 * log_gamma(kk)) * acc / cplx(0.0, 2.0 * pi);
}

cplx bg_su11_transform(const CoefficientState& s, const GroupElement& g,
                       cplx z) {
  const cplx b = g.b();
  if (std::abs(b) < 1e-14) {
    throw DomainError("bg_su11_transform: b = 0 is singular; use bg_rotation_transform");
  }
  const double k = s.k().value();
  const cplx ac = std::conj(g.a());
  const cplx x = -z / (ac * b);
  const cplx ratio = b / ac;
  // sqrt(n! / Gamma(n+2k)) carries the n! of R_n and the 1/sqrt(n! Gamma)
  // normalization together.
  double u = std::exp(-0.5 * log_gamma(2.0 * k));
  cplx p = 1.0;
  cplx sum = 0.0;
  cplx lag_prev = 0.0;
  cplx lag = 1.0;
  const double alpha = 2.0 * k - 1.0;
  for (std::size_t n = 0; n < s.size(); ++n) {
    if (n > 0) {
      u *= std::sqrt(n / (n - 1.0 + 2.0 * k));
      p *= ratio;
      const cplx next =
          n == 1 ? 1.0 + alpha - x
                 : ((2.0 * (n - 1) + 1.0 + alpha - x) * lag -
                    (n - 1.0 + alpha) * lag_prev) /
                       static_cast<double>(n);
      lag_prev = lag;
      lag = next;
    }
    sum += s[n] * u * p * lag;
  }
  return std::exp(-std::conj(b) * z / ac) * std::pow(ac, -2.0 * k) * sum;
}

cplx bg_rotation_transform(const CoefficientState& s, const GroupElement& g,
                           cplx z) {
  if (std::abs(g.b()) > 1e-14) {
    throw DomainError("bg_rotation_transform needs b = 0");
  }
  const cplx ac = std::conj(g.a());
  return std::pow(ac, -2.0 * s.k().value()) * eval_F(s, g.a() * z / ac);
}

cplx ODECoefficients::coefficient(int j, cplx x) const {
  cplx v = 0.0;
  const auto& poly = terms.at(j);
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = v * x + *it;
  return v;
}

cplx ODECoefficients::residual(cplx x, std::span<const cplx> derivatives) const {
  cplx r = 0.0;
  for (int j = 0; j <= order(); ++j) r += coefficient(j, x) * derivatives[j];
  return r;
}

double ODECoefficients::magnitude(cplx x, std::span<const cplx> derivatives) const {
  double m = 0.0;
  for (int j = 0; j <= order(); ++j) m += std::abs(coefficient(j, x) * derivatives[j]);
  return m;
}

namespace {

void require_nonzero(cplx b1, cplx b2, cplx b3) {
  if (b1 == 0.0 && b2 == 0.0 && b3 == 0.0) {
    throw DomainError("eigenvalue ODE needs a nonzero generator combination");
  }
}

}  // namespace

ODECoefficients build_eigen_ode_disk(cplx beta1, cplx beta2, cplx beta3,
                                     cplx lambda, BargmannIndex k) {
  require_nonzero(beta1, beta2, beta3);
  const cplx i(0.0, 1.0);
  const cplx bp = 0.5 * (beta1 + i * beta2);
  const cplx bm = 0.5 * (beta1 - i * beta2);
  const double kv = k.value();
  return {{{kv * beta3 - lambda, 2.0 * kv * bm}, {bp, beta3, bm}}};
}

ODECoefficients build_eigen_ode_bg(cplx beta1, cplx beta2, cplx beta3,
                                   cplx lambda, BargmannIndex k) {
  require_nonzero(beta1, beta2, beta3);
  const cplx i(0.0, 1.0);
  const cplx bp = 0.5 * (beta1 + i * beta2);
  const cplx bm = 0.5 * (beta1 - i * beta2);
  const double kv = k.value();
  return {{{kv * beta3 - lambda, bm}, {2.0 * kv * bp, beta3}, {0.0, bp}}};
}

}  // namespace su11

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "su11/analytic_reps.hpp"
#include "su11/errors.hpp"
#include "su11/resolutions.hpp"
#include "su11/two_photon.hpp"
#include "support.hpp"

using namespace su11;
using su11::testing::cauchy_derivatives;
using su11::testing::gaussian_c;
using su11::testing::in_disk;
using su11::testing::random_state;
using su11::testing::uniform;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double report_error(const IdentityReport& r) { return std::max(r.max_offdiag, r.max_diag_error); }

Outcome identity_resolutions() {
  double worst = 0.0;
  double oracle = 0.0;
  for (double k : {0.75, 1.0, 2.0}) {
    const auto r = disk_identity_check(BargmannIndex{k}, 8);
    worst = std::max(worst, report_error(r));
    for (int n = 0; n < 8; ++n) {
      // (2k-1) B(n+1, 2k-1) times the squared weight, from std::tgamma
      const double beta = std::tgamma(n + 1.0) * std::tgamma(2 * k - 1) / std::tgamma(n + 2 * k);
      const double w2 = std::tgamma(n + 2 * k) / (std::tgamma(n + 1.0) * std::tgamma(2 * k));
      oracle = std::max(oracle, std::abs(r.at(n, n).real() - (2 * k - 1) * beta * w2));
    }
  }
  for (double k : {0.25, 0.75, 2.0}) {
    const auto r = bg_identity_check(BargmannIndex{k}, 8);
    worst = std::max(worst, report_error(r));
  }
  return {worst <= 1e-6 && oracle <= 1e-6,
          fmt("max identity error %.2e, disk vs Gamma-ratio oracle %.2e (tol 1e-6)", worst, oracle)};
}

Outcome weak_resolution() {
  double worst = 0.0;
  for (double k : {0.25, 0.3, 0.75}) worst = std::max(worst, report_error(weak_identity_check(BargmannIndex{k}, 6)));
  const auto w = weak_identity_check(BargmannIndex{0.75}, 6);
  const auto d = disk_identity_check(BargmannIndex{0.75}, 6);
  double agree = 0.0;
  for (std::size_t i = 0; i < w.matrix.size(); ++i) agree = std::max(agree, std::abs(w.matrix[i] - d.matrix[i]));
  return {worst <= 1e-6 && agree <= 2e-6,
          fmt("max identity error %.2e (tol 1e-6), weak vs disk at k=0.75 %.2e (tol 2e-6)", worst, agree)};
}

Outcome laplace_bridge() {
  auto g = su11::testing::rng(1003);
  double fwd = 0.0;
  double inv = 0.0;
  double round = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double k = uniform(g, 0.1, 2.5);
    const auto s = random_state(g, k, 5, 4);
    // round trip: F on the circle |z| = 3 from the inverse integral, its
    // Taylor coefficients by DFT, then the forward integral of the rebuilt
    // state.  The radius keeps 1/(r^n v_n) from amplifying rounding noise.
    const int ns = 16;
    const double r = 3.0;
    std::vector<cplx> fz(ns);
    for (int m = 0; m < ns; ++m) fz[m] = inverse_laplace_G_to_F(s, std::polar(r, 2 * pi * m / ns));
    const auto v = bg_weights(k, ns - 1);
    std::vector<cplx> c(ns);
    for (int n = 0; n < ns; ++n) {
      cplx a = 0.0;
      for (int m = 0; m < ns; ++m) a += fz[m] * std::polar(1.0, -2 * pi * m * n / ns);
      c[n] = a / (static_cast<double>(ns) * v[n] * std::pow(r, n));
    }
    const CoefficientState rebuilt(BargmannIndex{k}, c);
    for (int j = 0; j < 10; ++j) {
      const cplx rho(uniform(g, 1.1, 4.0), uniform(g, -3.0, 3.0));
      fwd = std::max(fwd, std::abs(laplace_F_to_G(s, rho) - eval_G(s, 1.0 / rho)));
      round = std::max(round, std::abs(laplace_F_to_G(rebuilt, rho) - eval_G(s, 1.0 / rho)));
      const cplx z(uniform(g, -3.0, 3.0), uniform(g, -3.0, 3.0));
      inv = std::max(inv, std::abs(inverse_laplace_G_to_F(s, z) - eval_F(s, z)));
    }
  }
  return {fwd <= 1e-6 && inv <= 1e-6 && round <= 1e-6,
          fmt("forward %.2e, inverse %.2e, round trip %.2e (tol 1e-6)", fwd, inv, round)};
}

Outcome overlap_formula() {
  auto g = su11::testing::rng(1004);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double k = uniform(g, 0.1, 3.0);
    const cplx zeta = in_disk(g, 0.9);
    const cplx z = in_disk(g, 4.0);
    const BargmannIndex bk{k};
    const cplx sum = inner(perelomov_coefficients(std::conj(zeta), bk), bg_coefficients(z, bk));
    worst = std::max(worst, std::abs(overlap_perelomov_bg(zeta, z, bk) - sum));
  }
  return {worst <= 1e-9, fmt("closed form vs coefficient sum %.2e (tol 1e-9)", worst)};
}

Outcome eigen_relations() {
  auto g = su11::testing::rng(1005);
  const int N = 80;
  double bg = 0.0;
  double cat = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double k = uniform(g, 0.1, 3.0);
    const cplx z = in_disk(g, 3.0);
    const auto s = bg_coefficients(z, BargmannIndex{k}, N);
    const auto km = k_minus_apply(s);
    for (int n = 0; n < N; ++n) bg = std::max(bg, std::abs(km[n] - z * s[n]));
    const cplx alpha = in_disk(g, 2.0);
    for (Parity p : {Parity::even, Parity::odd}) {
      const auto c = even_odd_coherent(alpha, p, N);
      const auto a2 = displaced_generator_apply(Generator::k_minus, 0.0, c);
      for (int n = 0; n + 2 <= N; ++n) cat = std::max(cat, std::abs(a2[n] - 0.5 * alpha * alpha * c[n]));
    }
  }
  return {bg <= 1e-10 && cat <= 1e-10,
          fmt("BG residual %.2e, cat-state residual %.2e at N=80 (tol 1e-10)", bg, cat)};
}

Outcome spectrum() {
  auto g = su11::testing::rng(1006);
  const int M = 256;
  double level = 0.0;
  double spacing = 0.0;
  double parity = 0.0;
  int failing = 0;
  double recheck = 0.0;  // same failing cases at 2M, diagnostic only
  for (int i = 0; i < 50; ++i) {
    const double omega = uniform(g, 0.5, 2.0);
    const HamiltonianParams h{omega, in_disk(g, 0.8 * omega), omega * in_disk(g, 1.0)};
    const auto r = spectrum_analytic(h, 20);
    for (std::size_t j = 2; j < r.levels.size(); ++j) {
      spacing = std::max(spacing, std::abs(r.levels[j].energy - r.levels[j - 2].energy - r.gap));
    }
    const auto es = brute_force_eigensystem(h, M);
    const Eigen::MatrixXcd D = displacement_matrix(-r.eta, M);
    double case_err = 0.0;
    for (std::size_t j = 0; j < r.levels.size(); ++j) {
      const auto& lv = r.levels[j];
      if (lv.n > 40) continue;
      case_err = std::max(case_err, std::abs(lv.energy - es.values(j)));
      const Eigen::VectorXcd v = D * es.vectors.col(j);
      double wrong = 0.0;
      for (int n = lv.n % 2 == 0 ? 1 : 0; n <= M; n += 2) wrong += std::norm(v(n));
      parity = std::max(parity, wrong);
    }
    level = std::max(level, case_err);
    if (case_err > 1e-7) {
      ++failing;
      const auto big = brute_force_spectrum(h, 2 * M);
      for (std::size_t j = 0; j < r.levels.size(); ++j) {
        if (r.levels[j].n <= 40) recheck = std::max(recheck, std::abs(r.levels[j].energy - big[j]));
      }
    }
  }
  const auto ho = brute_force_spectrum({1.0, 0.0, 0.0}, M);
  double osc = 0.0;
  for (int n = 0; n <= 40; ++n) osc = std::max(osc, std::abs(ho[n] - (n + 0.5)));
  return {level <= 1e-7 && spacing <= 1e-10 && parity <= 1e-10 && osc <= 1e-12,
          fmt("levels %.2e (tol 1e-7), spacing %.2e (tol 1e-10), wrong-parity weight %.2e", level, spacing,
              parity) +
              fmt(", oscillator %.2e (tol 1e-12)", osc) +
              (failing ? fmt("; %.0f/50 cases above tol, those reach %.2e at M=512", failing, recheck) : "")};
}

Outcome eigenfunction() {
  auto g = su11::testing::rng(1007);
  double res = 0.0;
  double rmin = 1e300;
  for (int i = 0; i < 10; ++i) {
    const double omega = uniform(g, 0.5, 2.0);
    const HamiltonianParams h{omega, in_disk(g, 0.8 * omega), omega * in_disk(g, 1.0)};
    const double d = 0.5 * spectrum_analytic(h, 0).gap;
    for (int l = 0; l <= 5; ++l) {
      for (double k : {0.25, 0.75}) {
        const BargmannIndex bk{k};
        const auto s = eigenfunction_GD(h, l, bk);
        rmin = std::min(rmin, radius_estimate(s));
        const auto ode = build_eigen_ode_disk(2.0 * h.g.real(), -2.0 * h.g.imag(), 2.0 * h.omega,
                                              2.0 * d * (k + l), bk);
        for (int j = 0; j < 12; ++j) {
          const cplx x = std::polar(0.3 + 0.05 * (j % 4), 2 * pi * j / 12);
          const auto dg = cauchy_derivatives([&](cplx y) { return eval_G(s, y); }, x, 1, 0.05);
          res = std::max(res, std::abs(ode.residual(x, dg)) / std::max(1.0, ode.magnitude(x, dg)));
        }
      }
    }
  }
  return {res <= 1e-7 && rmin > 1.0,
          fmt("ODE residual %.2e (tol 1e-7), smallest certified radius %.4f (> 1)", res, rmin)};
}

Outcome kummer() {
  auto g = su11::testing::rng(1008);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double k = uniform(g, 0.1, 1.9);
    const BargmannIndex bk{k};
    const cplx b1 = gaussian_c(g), b2 = gaussian_c(g), b3 = 2.0 * gaussian_c(g), lam = gaussian_c(g);
    const auto ode = build_eigen_ode_bg(b1, b2, b3, lam, bk);
    const cplx bp = 0.5 * (b1 + cplx(0, 1) * b2);
    const cplx delta = std::sqrt(b3 * b3 - b1 * b1 - b2 * b2);
    for (Parity p : {Parity::even, Parity::odd}) {
      for (int j = 0; j < 4; ++j) {
        // |Delta z / b+| up to 20, away from the cut of (2z)^{1-2k}
        const double ax = uniform(g, 1.0, 20.0) / 1.1;
        const cplx z = std::polar(ax * std::abs(bp / delta), uniform(g, -2.5, 2.5));
        auto F = [&](cplx x) { return kummer_eigen_solution(b1, b2, b3, lam, bk, p, x); };
        const auto d = cauchy_derivatives(F, z, 2, 0.1 * std::abs(z));
        worst = std::max(worst, std::abs(ode.residual(z, d)) / std::max(1e-300, ode.magnitude(z, d)));
      }
    }
  }
  return {worst <= 1e-6, fmt("relative ODE residual %.2e (tol 1e-6)", worst)};
}

Outcome algebra() {
  auto g = su11::testing::rng(1009);
  double comm = 0.0;
  double cas = 0.0;
  double dual = 0.0;
  for (int i = 0; i < 10; ++i) {
    // two-photon realization, displaced
    const cplx eta = in_disk(g, 1.0);
    std::vector<cplx> c(40, 0.0);
    for (int n = 0; n < 24; ++n) c[n] = gaussian_c(g);
    const FullFockState psi{c};
    auto A = [&](Generator w, const FullFockState& s) { return displaced_generator_apply(w, eta, s); };
    const auto mp = A(Generator::k_minus, A(Generator::k_plus, psi));
    const auto pm = A(Generator::k_plus, A(Generator::k_minus, psi));
    const auto k3 = A(Generator::k3, psi);
    const auto k33 = A(Generator::k3, k3);
    for (int n = 0; n < 24; ++n) {
      comm = std::max(comm, std::abs(mp[n] - pm[n] - 2.0 * k3[n]));
      cas = std::max(cas, std::abs(k33[n] - 0.5 * (mp[n] + pm[n]) + 3.0 / 16.0 * psi[n]));
    }

    // differential operators against coefficient actions
    const double k = uniform(g, 0.1, 2.5);
    const auto s = random_state(g, k, 6, 9);
    const auto sp = k_plus_apply(s), sm = k_minus_apply(s), s3 = k3_apply(s);
    const cplx x = in_disk(g, 0.6);
    const auto dg = cauchy_derivatives([&](cplx y) { return eval_G(s, y); }, x, 1, 0.1);
    dual = std::max(dual, std::abs(eval_G(sp, x) - (x * x * dg[1] + 2 * k * x * dg[0])));
    dual = std::max(dual, std::abs(eval_G(sm, x) - dg[1]));
    dual = std::max(dual, std::abs(eval_G(s3, x) - (x * dg[1] + k * dg[0])));
    const cplx z = in_disk(g, 2.0);
    const auto df = cauchy_derivatives([&](cplx y) { return eval_F(s, y); }, z, 2, 0.3);
    dual = std::max(dual, std::abs(eval_F(sp, z) - z * df[0]));
    dual = std::max(dual, std::abs(eval_F(sm, z) - (z * df[2] + 2 * k * df[1])));
    dual = std::max(dual, std::abs(eval_F(s3, z) - (z * df[1] + k * df[0])));
  }
  return {comm <= 1e-6 && cas <= 1e-6 && dual <= 1e-6,
          fmt("commutator %.2e, Casimir vs -3/16 %.2e, differential duality %.2e (tol 1e-6)", comm, cas, dual)};
}

Outcome synthesis() {
  auto g = su11::testing::rng(1010);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const int size = 4 + static_cast<int>(uniform(g, 0.0, 16.0));
    std::vector<cplx> c(size);
    double nrm = 0.0;
    for (auto& x : c) {
      x = gaussian_c(g);
      nrm += std::norm(x);
    }
    for (auto& x : c) x /= std::sqrt(nrm);
    const FullFockState psi{c};
    const cplx alpha = in_disk(g, 2.5);
    cplx direct = 0.0;
    cplx p = 1.0;
    for (int n = 0; n < size; ++n) {
      direct += c[n] * p;
      p *= alpha / std::sqrt(n + 1.0);
    }
    worst = std::max(worst, std::abs(bargmann_synthesis(split_even_odd(psi), alpha) - direct));
  }
  return {worst <= 1e-9, fmt("synthesis vs direct Bargmann sum %.2e (tol 1e-9)", worst)};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"Identity resolutions (disk, BG)", identity_resolutions},
      {"Weak contour resolution", weak_resolution},
      {"Laplace bridge", laplace_bridge},
      {"Perelomov-BG overlap", overlap_formula},
      {"Lowering eigen-relations", eigen_relations},
      {"Oscillator spectrum", spectrum},
      {"Eigenfunction ODE and radius", eigenfunction},
      {"Kummer solutions", kummer},
      {"Algebra realization", algebra},
      {"Bargmann synthesis", synthesis},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}

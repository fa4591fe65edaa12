#include "su11/two_photon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "su11/errors.hpp"
#include "su11/specfun.hpp"

namespace su11 {

using std::numbers::pi;

double FullFockState::norm_squared() const noexcept {
  double s = 0.0;
  for (const auto& c : coeffs) s += std::norm(c);
  return s;
}

bool FullFockState::normalized() const noexcept {
  return std::abs(norm_squared() - 1.0) <= 1e-10;
}

bool FullFockState::truncation_warning() const noexcept {
  return truncation_loss > 1e-10 * (norm_squared() + truncation_loss);
}

cplx inner(const FullFockState& a, const FullFockState& b) {
  cplx s = 0.0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

TwoPhotonSplit split_even_odd(const FullFockState& psi) {
  std::vector<cplx> e;
  std::vector<cplx> o;
  for (std::size_t n = 0; n < psi.size(); ++n) (n % 2 == 0 ? e : o).push_back(psi[n]);
  if (e.empty()) e.push_back(0.0);
  if (o.empty()) o.push_back(0.0);
  CoefficientState even(BargmannIndex{0.25}, std::move(e));
  CoefficientState odd(BargmannIndex{0.75}, std::move(o));
  const double ne = even.norm_squared();
  const double no = odd.norm_squared();
  return {std::move(even), std::move(odd), ne, no};
}

FullFockState merge_even_odd(const TwoPhotonSplit& split) {
  const std::size_t n = std::max(2 * split.even.size() - 1, 2 * split.odd.size());
  FullFockState out{std::vector<cplx>(n, 0.0)};
  for (std::size_t i = 0; i < split.even.size(); ++i) out.coeffs[2 * i] = split.even[i];
  for (std::size_t i = 0; i < split.odd.size(); ++i) out.coeffs[2 * i + 1] = split.odd[i];
  return out;
}

FullFockState embed(const CoefficientState& s) {
  const double k = s.k().value();
  int shift;
  if (k == 0.25) {
    shift = 0;
  } else if (k == 0.75) {
    shift = 1;
  } else {
    throw DomainError("two-photon embedding needs k = 1/4 or 3/4");
  }
  FullFockState out{std::vector<cplx>(2 * s.size() - 1 + shift, 0.0), s.truncation_loss()};
  for (std::size_t n = 0; n < s.size(); ++n) out.coeffs[2 * n + shift] = s[n];
  return out;
}

FullFockState squeezed_vacuum(cplx zeta, int truncation) {
  return embed(perelomov_coefficients(zeta, BargmannIndex{0.25}, truncation));
}

FullFockState squeezed_one_photon(cplx zeta, int truncation) {
  return embed(perelomov_coefficients(zeta, BargmannIndex{0.75}, truncation));
}

FullFockState even_odd_coherent(cplx alpha, Parity parity, int truncation) {
  const double r = std::abs(alpha);
  const int first = parity == Parity::even ? 0 : 1;
  if (parity == Parity::odd && r < 1e-6) {
    throw DomainError("odd coherent state needs |alpha| >= 1e-6");
  }
  // log |alpha^n / sqrt(n!)|, measured against its largest value
  auto log_term = [&](int n) {
    return r == 0.0 ? (n == 0 ? 0.0 : -1e300) : n * std::log(r) - 0.5 * std::lgamma(n + 1.0);
  };
  int top = truncation;
  if (top < 0) {
    top = std::max(16, static_cast<int>(std::ceil(r * r + 12.0 * r + 16.0)));
    while (2.0 * (log_term(top) - log_term(std::max(first, static_cast<int>(r * r)))) > std::log(1e-22)) {
      if (top >= 8 * kMaxTruncation) throw ConvergenceError("coherent state tail does not close");
      top *= 2;
    }
  }
  double peak = -1e300;
  for (int n = first; n <= top; n += 2) peak = std::max(peak, log_term(n));
  FullFockState out{std::vector<cplx>(top + 1, 0.0)};
  const double phi = std::arg(alpha);
  double norm = 0.0;
  for (int n = first; n <= top; n += 2) {
    out.coeffs[n] = std::polar(std::exp(log_term(n) - peak), n * phi);
    norm += std::norm(out.coeffs[n]);
  }
  for (auto& c : out.coeffs) c /= std::sqrt(norm);
  return out;
}

cplx bargmann_synthesis(const TwoPhotonSplit& split, cplx alpha) {
  const cplx z = 0.5 * alpha * alpha;
  return std::pow(pi, 0.25) *
         (eval_F(split.even, z) + alpha / std::sqrt(2.0) * eval_F(split.odd, z));
}

cplx kummer_eigen_solution(cplx beta1, cplx beta2, cplx beta3, cplx lambda,
                           BargmannIndex k, Parity branch, cplx z) {
  const cplx bp = 0.5 * (beta1 + cplx(0.0, 1.0) * beta2);
  const double scale = std::max({std::abs(beta1), std::abs(beta2), std::abs(beta3)});
  if (std::abs(bp) <= 1e-14 * scale || scale == 0.0) {
    throw DomainError("Kummer solution needs beta1 + i beta2 != 0");
  }
  const cplx delta = std::sqrt(beta3 * beta3 - beta1 * beta1 - beta2 * beta2);
  if (std::abs(delta) <= 1e-14 * scale) {
    throw DomainError("Kummer solution needs beta3^2 - beta1^2 - beta2^2 != 0");
  }
  const double kv = k.value();
  const cplx front = std::exp((delta - beta3) * z / (2.0 * bp));
  const cplx x = -delta * z / bp;
  if (branch == Parity::even) {
    return front * kummer_phi(kv - lambda / delta, 2.0 * kv, x);
  }
  return std::pow(2.0 * z, 1.0 - 2.0 * kv) * front *
         kummer_phi(1.0 - kv - lambda / delta, 2.0 - 2.0 * kv, x);
}

namespace {

// (a - eta) psi
FullFockState shifted_lower(const FullFockState& psi, cplx eta) {
  FullFockState out{std::vector<cplx>(psi.size(), 0.0), psi.truncation_loss};
  for (std::size_t n = 0; n < psi.size(); ++n) {
    out.coeffs[n] = -eta * psi[n];
    if (n + 1 < psi.size()) out.coeffs[n] += std::sqrt(n + 1.0) * psi[n + 1];
  }
  return out;
}

// (a^dag - conj eta) psi; the top level's image is dropped and counted
FullFockState shifted_raise(const FullFockState& psi, cplx eta) {
  FullFockState out{std::vector<cplx>(psi.size(), 0.0), psi.truncation_loss};
  for (std::size_t n = 0; n < psi.size(); ++n) {
    out.coeffs[n] = -std::conj(eta) * psi[n];
    if (n > 0) out.coeffs[n] += std::sqrt(static_cast<double>(n)) * psi[n - 1];
  }
  if (!psi.coeffs.empty()) out.truncation_loss += psi.size() * std::norm(psi.coeffs.back());
  return out;
}

FullFockState scaled(cplx s, FullFockState psi) {
  for (auto& c : psi.coeffs) c *= s;
  psi.truncation_loss *= std::norm(s);
  return psi;
}

}  // namespace

FullFockState displaced_generator_apply(Generator which, cplx eta,
                                        const FullFockState& psi) {
  switch (which) {
    case Generator::k_minus:
      return scaled(0.5, shifted_lower(shifted_lower(psi, eta), eta));
    case Generator::k_plus:
      return scaled(0.5, shifted_raise(shifted_raise(psi, eta), eta));
    case Generator::k3: {
      auto out = scaled(0.5, shifted_raise(shifted_lower(psi, eta), eta));
      for (std::size_t n = 0; n < psi.size(); ++n) out.coeffs[n] += 0.25 * psi[n];
      return out;
    }
  }
  throw DomainError("unknown generator");
}

void HamiltonianParams::validate() const {
  if (!(omega > 0.0) || !std::isfinite(omega) || !std::isfinite(std::abs(g)) ||
      !std::isfinite(std::abs(f))) {
    throw DomainError("Hamiltonian needs finite omega > 0, g and f");
  }
}

bool HamiltonianParams::discrete() const { return omega > std::abs(g); }

namespace {

double check_regime(const HamiltonianParams& h) {
  h.validate();
  if (!h.discrete()) {
    throw RegimeError("omega <= |g|: the spectrum is continuous");
  }
  return std::sqrt((h.omega - std::abs(h.g)) * (h.omega + std::abs(h.g)));
}

}  // namespace

SqueezeParams params_to_squeeze(const HamiltonianParams& h) {
  const double d = check_regime(h);
  const double s = std::asinh(std::abs(h.g) / d);
  double theta = std::abs(h.g) == 0.0 ? 0.0 : std::arg(-h.g);
  if (theta < 0.0) theta += 2.0 * pi;
  const cplx eta = (h.g * std::conj(h.f) - h.omega * h.f) / (d * d);
  return {s, theta, eta};
}

SpectrumResult spectrum_analytic(const HamiltonianParams& h, int l_max) {
  const double d = check_regime(h);
  if (l_max < 0) throw DomainError("l_max must be >= 0");
  const auto sq = params_to_squeeze(h);
  const double d2 = d * d;
  const double delta =
      (h.omega * std::norm(h.f) - std::real(h.g * std::conj(h.f) * std::conj(h.f))) / d2;
  SpectrumResult out{{}, sq.eta, delta, std::conj(h.g) / (h.omega + d), sq.s, sq.theta, 2.0 * d};
  for (int l = 0; l <= l_max; ++l) {
    for (double k : {0.25, 0.75}) {
      out.levels.push_back({l, k, 2 * l + (k == 0.25 ? 0 : 1), 2.0 * d * (k + l) - delta});
    }
  }
  std::stable_sort(out.levels.begin(), out.levels.end(),
                   [](const auto& a, const auto& b) { return a.energy < b.energy; });
  return out;
}

CoefficientState eigenfunction_GD(const HamiltonianParams& h, int l,
                                  BargmannIndex k, int truncation) {
  const double d = check_regime(h);
  const double kv = k.value();
  if (kv != 0.25 && kv != 0.75) throw DomainError("eigenfunction needs k = 1/4 or 3/4");
  if (l < 0) throw DomainError("l must be >= 0");
  const cplx chi = std::conj(h.g) / (h.omega + d);
  const cplx chic = std::conj(chi);

  // binom(l, i) chi^{l-i}
  std::vector<cplx> head(l + 1);
  {
    cplx p = 1.0;
    for (int i = l; i >= 0; --i) {
      head[i] = p * std::exp(std::lgamma(l + 1.0) - std::lgamma(i + 1.0) - std::lgamma(l - i + 1.0));
      p *= chi;
    }
  }
  int n_top = std::max({truncation, l + 1, 1});
  while (true) {
    // binom(-2k-l, j) conj(chi)^j
    std::vector<cplx> tail(n_top + 1);
    tail[0] = 1.0;
    for (int j = 1; j <= n_top; ++j) {
      tail[j] = tail[j - 1] * ((-2.0 * kv - l - j + 1.0) / j) * chic;
    }
    const auto w = disk_weights(kv, n_top);
    std::vector<cplx> c(n_top + 1, 0.0);
    for (int n = 0; n <= n_top; ++n) {
      cplx a = 0.0;
      for (int i = 0; i <= std::min(l, n); ++i) a += head[i] * tail[n - i];
      c[n] = a / w[n];
    }
    double norm = 0.0;
    for (const auto& x : c) norm += std::norm(x);
    if (std::norm(c.back()) <= 1e-20 * norm) {
      const auto lead = std::find_if(c.begin(), c.end(), [&](cplx x) {
        return std::norm(x) > 1e-30 * norm;
      });
      const cplx phase = std::conj(*lead) / std::abs(*lead);
      for (auto& x : c) x *= phase / std::sqrt(norm);
      const double radius = std::abs(chi) > 0.0 ? 1.0 / std::abs(chi) : kRadiusCap;
      return CoefficientState(k, std::move(c), SeriesKind::truncated)
          .with_certified_radius(std::min(radius, kRadiusCap));
    }
    if (n_top >= kMaxTruncation) {
      throw ConvergenceError("eigenfunction needs truncation beyond " +
                             std::to_string(kMaxTruncation));
    }
    n_top = std::min(2 * n_top, kMaxTruncation);
  }
}

Eigen::MatrixXcd hamiltonian_matrix(const HamiltonianParams& h, int M) {
  h.validate();
  if (M < 1) throw DomainError("Fock truncation must be >= 1");
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(M + 1, M + 1);
  for (int n = 0; n <= M; ++n) {
    H(n, n) = h.omega * (n + 0.5);
    if (n + 1 <= M) {
      H(n + 1, n) = h.f * std::sqrt(n + 1.0);
      H(n, n + 1) = std::conj(H(n + 1, n));
    }
    if (n + 2 <= M) {
      H(n + 2, n) = 0.5 * h.g * std::sqrt((n + 1.0) * (n + 2.0));
      H(n, n + 2) = std::conj(H(n + 2, n));
    }
  }
  return H;
}

FockEigensystem brute_force_eigensystem(const HamiltonianParams& h, int M) {
  if (M < 64) throw DomainError("brute-force spectrum needs M >= 64");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hamiltonian_matrix(h, M));
  if (es.info() != Eigen::Success) throw ConvergenceError("Hermitian eigensolver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

std::vector<double> brute_force_spectrum(const HamiltonianParams& h, int M) {
  if (M < 64) throw DomainError("brute-force spectrum needs M >= 64");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hamiltonian_matrix(h, M),
                                                     Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ConvergenceError("Hermitian eigensolver failed");
  const auto& v = es.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

namespace {

constexpr int kExpHeadroom = 32;

Eigen::MatrixXcd lowering(int size) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(size, size);
  for (int n = 1; n < size; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

}  // namespace

Eigen::MatrixXcd displacement_matrix(cplx eta, int M) {
  if (M < 0) throw DomainError("truncation must be >= 0");
  const int size = M + 1 + kExpHeadroom;
  const Eigen::MatrixXcd a = lowering(size);
  const Eigen::MatrixXcd gen = eta * a.adjoint() - std::conj(eta) * a;
  return gen.exp().topLeftCorner(M + 1, M + 1);
}

Eigen::MatrixXcd squeeze_matrix(cplx xi, int M) {
  if (M < 0) throw DomainError("truncation must be >= 0");
  const int size = M + 1 + kExpHeadroom;
  const Eigen::MatrixXcd a = lowering(size);
  const Eigen::MatrixXcd a2 = a * a;
  const Eigen::MatrixXcd gen = 0.5 * xi * a2.adjoint() - 0.5 * std::conj(xi) * a2;
  return gen.exp().topLeftCorner(M + 1, M + 1);
}

FullFockState apply(const Eigen::MatrixXcd& op, const FullFockState& psi) {
  if (op.cols() != static_cast<Eigen::Index>(psi.size())) {
    throw DomainError("operator and state truncations differ");
  }
  const Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(psi.coeffs.data(), psi.size());
  const Eigen::VectorXcd r = op * v;
  return {std::vector<cplx>(r.data(), r.data() + r.size()), psi.truncation_loss};
}

IdentityReport squeezed_resolution_check(int M, cplx eta,
                                         const QuadratureSpec& quad, Exec exec) {
  if (M < 1) throw DomainError("identity check needs M >= 1");
  // levels beyond M that D(eta) mixes into the reported block
  const int pad = eta == 0.0 ? 0 : 24 + static_cast<int>(std::ceil(8.0 * std::abs(eta) * std::abs(eta)));
  const int sector = (M + pad + 1) / 2;
  const int F = 2 * sector;
  const cplx pe = 1.0 / (8.0 * pi);
  const cplx po = -1.0 / (8.0 * pi);
  const auto e = contour_projector_matrix(0.25, sector, pe, quad, exec);
  const auto o = contour_projector_matrix(0.75, sector, po, quad, exec);
  Eigen::MatrixXcd X = Eigen::MatrixXcd::Zero(F, F);
  for (int m = 0; m < sector; ++m) {
    for (int n = 0; n < sector; ++n) {
      X(2 * m, 2 * n) = e[m * sector + n];
      X(2 * m + 1, 2 * n + 1) = o[m * sector + n];
    }
  }
  if (eta != 0.0) {
    const Eigen::MatrixXcd D = displacement_matrix(eta, F - 1);
    X = D * X * D.adjoint();
  }
  std::vector<cplx> mat(M * M);
  for (int m = 0; m < M; ++m) {
    for (int n = 0; n < M; ++n) mat[m * M + n] = X(m, n);
  }
  const double selftest =
      std::max(contour_selftest(0.25, pe, quad), contour_selftest(0.75, po, quad));
  return identity_report(BargmannIndex{0.25}, M, std::move(mat), selftest);
}

}  // namespace su11

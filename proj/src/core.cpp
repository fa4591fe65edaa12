#include "su11/core.hpp"

#include <algorithm>
#include <cmath>

#include "su11/errors.hpp"
#include "su11/specfun.hpp"

namespace su11 {

BargmannIndex::BargmannIndex(double k) : k_(k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw DomainError("Bargmann index must be a positive finite number");
  }
}

bool BargmannIndex::is_weak_special() const noexcept {
  return is_integer_or_half_integer(k_);
}

CoefficientState::CoefficientState(BargmannIndex k, std::vector<cplx> coeffs,
                                   SeriesKind kind)
    : k_(k), coeffs_(std::move(coeffs)), kind_(kind) {
  if (coeffs_.empty()) {
    throw DomainError("CoefficientState needs at least one coefficient");
  }
}

CoefficientState CoefficientState::basis(BargmannIndex k, int n,
                                         int truncation) {
  if (n < 0 || truncation < n) {
    throw DomainError("basis state index outside truncation");
  }
  std::vector<cplx> c(truncation + 1, 0.0);
  c[n] = 1.0;
  return {k, std::move(c)};
}

CoefficientState CoefficientState::zero(BargmannIndex k, int truncation) {
  if (truncation < 0) throw DomainError("negative truncation");
  return {k, std::vector<cplx>(truncation + 1, 0.0)};
}

double CoefficientState::norm_squared() const noexcept {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return s;
}

double CoefficientState::norm() const noexcept {
  return std::sqrt(norm_squared());
}

bool CoefficientState::normalized() const noexcept {
  return std::abs(norm_squared() - 1.0) <= 1e-10;
}

bool CoefficientState::truncation_warning() const noexcept {
  return truncation_loss_ > 1e-10 * (norm_squared() + truncation_loss_);
}

CoefficientState CoefficientState::with_truncation_loss(double loss) const {
  CoefficientState out = *this;
  out.truncation_loss_ = loss;
  return out;
}

CoefficientState CoefficientState::with_certified_radius(double radius) const {
  CoefficientState out = *this;
  out.radius_ = radius;
  return out;
}

CoefficientState CoefficientState::resized(int truncation) const {
  if (truncation < 0) throw DomainError("negative truncation");
  std::vector<cplx> c(coeffs_.begin(),
                      coeffs_.begin() + std::min<std::size_t>(coeffs_.size(),
                                                              truncation + 1));
  c.resize(truncation + 1, 0.0);
  CoefficientState out{k_, std::move(c), kind_};
  out.radius_ = radius_;
  return out;
}

namespace {

void require_same_k(const CoefficientState& a, const CoefficientState& b) {
  if (!(a.k() == b.k())) {
    throw DomainError("states belong to different representations");
  }
}

SeriesKind combine(SeriesKind a, SeriesKind b) {
  return a == SeriesKind::exact && b == SeriesKind::exact ? SeriesKind::exact
                                                          : SeriesKind::truncated;
}

template <typename Op>
CoefficientState zip(const CoefficientState& a, const CoefficientState& b,
                     Op op) {
  require_same_k(a, b);
  const std::size_t n = std::max(a.size(), b.size());
  std::vector<cplx> c(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx x = i < a.size() ? a[i] : 0.0;
    const cplx y = i < b.size() ? b[i] : 0.0;
    c[i] = op(x, y);
  }
  return {a.k(), std::move(c), combine(a.kind(), b.kind())};
}

}  // namespace

CoefficientState operator+(const CoefficientState& a,
                           const CoefficientState& b) {
  return zip(a, b, [](cplx x, cplx y) { return x + y; });
}

CoefficientState operator-(const CoefficientState& a,
                           const CoefficientState& b) {
  return zip(a, b, [](cplx x, cplx y) { return x - y; });
}

CoefficientState operator*(cplx s, const CoefficientState& a) {
  std::vector<cplx> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x *= s;
  CoefficientState out{a.k(), std::move(c), a.kind()};
  out.radius_ = a.radius_;
  return out;
}

cplx inner(const CoefficientState& a, const CoefficientState& b) {
  require_same_k(a, b);
  cplx s = 0.0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

std::vector<double> disk_weights(double k, int truncation) {
  std::vector<double> w(truncation + 1);
  // w_n^2 = w_{n-1}^2 (n - 1 + 2k) / n
  double sq = 1.0;
  w[0] = 1.0;
  for (int n = 1; n <= truncation; ++n) {
    sq *= (n - 1.0 + 2.0 * k) / n;
    w[n] = std::sqrt(sq);
  }
  return w;
}

std::vector<double> bg_weights(double k, int truncation) {
  std::vector<double> w(truncation + 1);
  w[0] = std::exp(-0.5 * log_gamma(2.0 * k));
  for (int n = 1; n <= truncation; ++n) {
    w[n] = w[n - 1] / std::sqrt(n * (n - 1.0 + 2.0 * k));
  }
  return w;
}

CoefficientState k_plus_apply(const CoefficientState& s) {
  const double k = s.k().value();
  const int top = s.truncation();
  std::vector<cplx> c(s.size(), 0.0);
  for (int n = 1; n <= top; ++n) {
    c[n] = std::sqrt(n * (n - 1.0 + 2.0 * k)) * s[n - 1];
  }
  const double dropped =
      std::norm(std::sqrt((top + 1.0) * (top + 2.0 * k)) * s[top]);
  return CoefficientState{s.k(), std::move(c), s.kind()}.with_truncation_loss(
      dropped);
}

CoefficientState k_minus_apply(const CoefficientState& s) {
  const double k = s.k().value();
  const int top = s.truncation();
  std::vector<cplx> c(s.size(), 0.0);
  for (int n = 0; n < top; ++n) {
    c[n] = std::sqrt((n + 1.0) * (n + 2.0 * k)) * s[n + 1];
  }
  return {s.k(), std::move(c), s.kind()};
}

CoefficientState k3_apply(const CoefficientState& s) {
  const double k = s.k().value();
  std::vector<cplx> c(s.coeffs().begin(), s.coeffs().end());
  for (std::size_t n = 0; n < c.size(); ++n) c[n] *= (n + k);
  return {s.k(), std::move(c), s.kind()};
}

double casimir_residual(const CoefficientState& s) {
  if (!s.normalized()) {
    throw DomainError("casimir_residual expects a normalized state");
  }
  const auto k3 = k3_apply(k3_apply(s));
  const auto pm = k_plus_apply(k_minus_apply(s));
  const auto mp = k_minus_apply(k_plus_apply(s));
  const auto r = k3 - 0.5 * (pm + mp) - s.k().casimir() * s;
  return r.norm();
}

cplx HyperbolicParams::xi() const {
  return -0.5 * tau * std::polar(1.0, -phi);
}

cplx HyperbolicParams::zeta() const {
  return -std::tanh(0.5 * tau) * std::polar(1.0, -phi);
}

GroupElement::GroupElement(cplx a, cplx b) : a_(a), b_(b) {
  if (determinant_residual() > 1e-10 * std::max(1.0, std::norm(a))) {
    throw DomainError("group element violates |a|^2 - |b|^2 = 1");
  }
}

cplx GroupElement::mobius(cplx zeta) const {
  return (a_ * zeta + b_) / (std::conj(b_) * zeta + std::conj(a_));
}

cplx GroupElement::coherent_label() const {
  return -std::conj(b_) / std::conj(a_);
}

double GroupElement::determinant_residual() const {
  return std::abs(std::norm(a_) - std::norm(b_) - 1.0);
}

GroupElement group_element_from_hyperbolic(const HyperbolicParams& p) {
  return {std::cosh(0.5 * p.tau), std::sinh(0.5 * p.tau) * std::polar(1.0, p.phi)};
}

GroupElement group_element_from_xi(cplx xi) {
  const double r = std::abs(xi);
  if (r == 0.0) return GroupElement::identity();
  return {std::cosh(r), -std::conj(xi) / r * std::sinh(r)};
}

GroupElement group_compose(const GroupElement& g1, const GroupElement& g2) {
  const cplx a = g1.a() * g2.a() + g1.b() * std::conj(g2.b());
  const cplx b = g1.a() * g2.b() + g1.b() * std::conj(g2.a());
  return {a, b};
}

}  // namespace su11

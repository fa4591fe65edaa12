#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace su11 {

using cplx = std::complex<double>;

/// Bargmann index k > 0 of a positive discrete-series representation.
class BargmannIndex {
 public:
  explicit BargmannIndex(double k);

  double value() const noexcept { return k_; }

  /// 2k integer: the contour (weak) resolution is undefined there.
  bool is_weak_special() const noexcept;

  /// Casimir eigenvalue k(k - 1).
  double casimir() const noexcept { return k_ * (k_ - 1.0); }

  friend bool operator==(BargmannIndex a, BargmannIndex b) {
    return a.k_ == b.k_;
  }

 private:
  double k_;
};

/// Whether a coefficient list is an exact finite expansion or the head of
/// an infinite series cut off at its truncation.
enum class SeriesKind { exact, truncated };

/// Truncated expansion sum_n C_n |n,k>, n = 0..N.  Immutable value.
class CoefficientState {
 public:
  CoefficientState(BargmannIndex k, std::vector<cplx> coeffs,
                   SeriesKind kind = SeriesKind::exact);

  /// Unit vector |n,k> inside a truncation N >= n.
  static CoefficientState basis(BargmannIndex k, int n, int truncation);
  static CoefficientState zero(BargmannIndex k, int truncation);

  BargmannIndex k() const noexcept { return k_; }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }
  cplx operator[](std::size_t n) const noexcept { return coeffs_[n]; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  int truncation() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  SeriesKind kind() const noexcept { return kind_; }

  double norm_squared() const noexcept;
  double norm() const noexcept;
  bool normalized() const noexcept;

  /// Squared magnitude discarded at the top by the operation that produced
  /// this state (zero for freshly constructed states).
  double truncation_loss() const noexcept { return truncation_loss_; }
  bool truncation_warning() const noexcept;

  /// Analytic lower bound on the convergence radius of G, when known.
  std::optional<double> certified_radius() const noexcept { return radius_; }

  CoefficientState with_truncation_loss(double loss) const;
  CoefficientState with_certified_radius(double radius) const;
  /// Same data padded with zeros (or cut) to truncation N.
  CoefficientState resized(int truncation) const;

  friend CoefficientState operator+(const CoefficientState& a,
                                    const CoefficientState& b);
  friend CoefficientState operator-(const CoefficientState& a,
                                    const CoefficientState& b);
  friend CoefficientState operator*(cplx s, const CoefficientState& a);

 private:
  BargmannIndex k_;
  std::vector<cplx> coeffs_;
  SeriesKind kind_;
  double truncation_loss_ = 0.0;
  std::optional<double> radius_;
};

/// <a|b> = sum conj(a_n) b_n over the common range.
cplx inner(const CoefficientState& a, const CoefficientState& b);

/// sqrt(Gamma(n+2k) / (n! Gamma(2k))) for n = 0..N; the unit-disk weights.
std::vector<double> disk_weights(double k, int truncation);

/// 1 / sqrt(n! Gamma(n+2k)) for n = 0..N; the entire-function weights.
std::vector<double> bg_weights(double k, int truncation);

// Generator actions on |n,k>:
//   K+ |n> = sqrt((n+1)(n+2k)) |n+1>
//   K- |n> = sqrt(n(n+2k-1))   |n-1>
//   K3 |n> = (n+k) |n>
CoefficientState k_plus_apply(const CoefficientState& s);
CoefficientState k_minus_apply(const CoefficientState& s);
CoefficientState k3_apply(const CoefficientState& s);

/// || (K3^2 - (K+K- + K-K+)/2 - k(k-1)) s ||.  Requires s normalized.
double casimir_residual(const CoefficientState& s);

/// Pseudo-Euclidean unit vector (sinh tau cos phi, sinh tau sin phi, cosh tau).
struct HyperbolicParams {
  double tau = 0.0;
  double phi = 0.0;

  /// Displacement amplitude xi = -(tau/2) e^{-i phi}.
  cplx xi() const;
  /// Disk label zeta = (xi/|xi|) tanh|xi| = -tanh(tau/2) e^{-i phi}.
  cplx zeta() const;
};

/// SU(1,1) element [[a, b], [conj b, conj a]] with |a|^2 - |b|^2 = 1.
class GroupElement {
 public:
  GroupElement(cplx a, cplx b);

  static GroupElement identity() { return {1.0, 0.0}; }

  cplx a() const noexcept { return a_; }
  cplx b() const noexcept { return b_; }

  /// zeta -> (a zeta + b) / (conj(b) zeta + conj(a)).
  cplx mobius(cplx zeta) const;

  GroupElement inverse() const { return {std::conj(a_), -b_}; }

  /// Disk label of the coherent state reached from |0,k> by this element,
  /// zeta = -conj(b) / conj(a).
  cplx coherent_label() const;

  double determinant_residual() const;

 private:
  cplx a_;
  cplx b_;
};

/// a = cosh(tau/2), b = sinh(tau/2) e^{i phi}.
GroupElement group_element_from_hyperbolic(const HyperbolicParams& p);

/// Element with a = cosh|xi|, b = -(conj(xi)/|xi|) sinh|xi|, so that its
/// coherent label is (xi/|xi|) tanh|xi|.
GroupElement group_element_from_xi(cplx xi);

/// Matrix product g1 g2; its Mobius map is mobius_g1 o mobius_g2.
GroupElement group_compose(const GroupElement& g1, const GroupElement& g2);

}  // namespace su11

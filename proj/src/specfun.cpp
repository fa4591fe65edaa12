#include "su11/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/special_functions/bessel.hpp>

#include "su11/errors.hpp"

namespace su11 {

using cd = std::complex<double>;
using std::numbers::pi;

namespace {

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

cd lanczos_sum(cd zm1) {
  cd x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    x += kLanczos[i] / (zm1 + static_cast<double>(i));
  }
  return x;
}

bool is_nonpositive_integer(cd x) {
  return x.imag() == 0.0 && x.real() <= 0.0 &&
         x.real() == std::floor(x.real());
}

// Ascending series, all terms positive for nu > -1.
double bessel_i_series(double nu, double x) {
  const double q = 0.25 * x * x;
  double term = std::exp(nu * std::log(0.5 * x) - log_gamma(nu + 1.0));
  double sum = term;
  for (int m = 1; m < 1000; ++m) {
    term *= q / (m * (m + nu));
    sum += term;
    if (term < 1e-17 * sum) return sum;
  }
  throw ConvergenceError("bessel_i: power series did not converge");
}

// Hankel large-argument expansion, truncated at its smallest term.
double bessel_i_asymptotic(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double sum = 1.0;
  double last = 1.0;
  for (int j = 1; j < 200; ++j) {
    const double odd = 2.0 * j - 1.0;
    term *= -(mu - odd * odd) / (j * 8.0 * x);
    if (std::abs(term) > last) break;
    sum += term;
    last = std::abs(term);
    if (last < 1e-17 * std::abs(sum)) break;
  }
  return std::exp(x) / std::sqrt(2.0 * pi * x) * sum;
}

}  // namespace

void SeriesControl::validate() const {
  if (max_terms < 1 || !(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw DomainError("SeriesControl needs max_terms >= 1 and positive tolerances");
  }
}

bool is_integer_or_half_integer(double k) {
  const double twice = 2.0 * k;
  return std::abs(twice - std::round(twice)) < 1e-12;
}

cd gamma_fn(cd x) {
  if (is_nonpositive_integer(x)) {
    throw DomainError("gamma_fn: pole at non-positive integer " +
                      std::to_string(x.real()));
  }
  if (x.real() < 0.5) {
    return pi / (std::sin(pi * x) * gamma_fn(1.0 - x));
  }
  const cd z = x - 1.0;
  const cd t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * pi) * std::exp((z + 0.5) * std::log(t) - t) *
         lanczos_sum(z);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
  if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(cd(z, 0.0)).real());
}

double bessel_i(double nu, double x) {
  if (!(nu > -1.0)) throw DomainError("bessel_i: order must exceed -1");
  if (x < 0.0) throw DomainError("bessel_i: argument must be non-negative");
  if (x == 0.0) {
    if (nu == 0.0) return 1.0;
    return nu > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  // The Hankel expansion loses accuracy for large orders; move the switch
  // point out with nu^2 so its smallest term stays below 1e-13.
  const double switch_x = std::max(15.0, 2.0 * nu * nu);
  return x <= switch_x ? bessel_i_series(nu, x) : bessel_i_asymptotic(nu, x);
}

double bessel_k(double nu, double x) {
  if (!(x > 0.0)) throw DomainError("bessel_k: argument must be positive");
  return boost::math::cyl_bessel_k(std::abs(nu), x);
}

cd kummer_phi(cd a, cd b, cd x, const SeriesControl& ctl) {
  ctl.validate();
  if (is_nonpositive_integer(b)) {
    throw DomainError("kummer_phi: b is a non-positive integer");
  }
  const bool polynomial = is_nonpositive_integer(a);
  // Kummer's transformation keeps the summed series free of alternating
  // cancellation when Re x < 0.
  if (!polynomial && x.real() < 0.0) {
    return std::exp(x) * kummer_phi(b - a, b, -x, ctl);
  }
  cd term = 1.0;
  cd sum = 1.0;
  const double floor_n = std::abs(x) + std::abs(a);
  for (int n = 0; n < ctl.max_terms; ++n) {
    term *= (a + static_cast<double>(n)) * x /
            ((b + static_cast<double>(n)) * static_cast<double>(n + 1));
    sum += term;
    if (term == 0.0) return sum;
    const double mag = std::abs(term);
    if (n + 1 > floor_n &&
        (mag <= ctl.abs_tol || mag <= ctl.rel_tol * std::abs(sum))) {
      return sum;
    }
  }
  throw ConvergenceError("kummer_phi: series did not converge within " +
                         std::to_string(ctl.max_terms) + " terms");
}

cd laguerre_assoc(int n, double alpha, cd x) {
  if (n < 0) throw DomainError("laguerre_assoc: degree must be non-negative");
  cd prev = 1.0;
  if (n == 0) return prev;
  cd cur = 1.0 + alpha - x;
  for (int m = 1; m < n; ++m) {
    const cd next = ((2.0 * m + 1.0 + alpha - x) * cur - (m + alpha) * prev) /
                    static_cast<double>(m + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

cd beta_contour_weight(int n, double k, const QuadratureSpec& quad) {
  quad.validate();
  if (!(k > 0.0)) throw DomainError("beta_contour_weight: k must be positive");
  if (is_integer_or_half_integer(k)) {
    throw DomainError(
        "beta_contour_weight: k must not be an integer or half-integer");
  }
  if (n < 0) throw DomainError("beta_contour_weight: n must be non-negative");
  const double y = 2.0 * k - 1.0;
  cd acc = 0.0;
  for (const auto& node : keyhole_contour(quad.contour_radius, quad.segment_nodes)) {
    acc += std::pow(node.t, n) * pow_t_minus_1(node, y - 1.0) * node.dt;
  }
  return acc / (cd(0.0, 2.0) * std::sin(pi * y));
}

}  // namespace su11

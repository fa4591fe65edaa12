#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "su11/core.hpp"

namespace su11::testing {

using cplx = std::complex<double>;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline cplx in_disk(std::mt19937_64& g, double rmax) {
  const double r = rmax * std::sqrt(uniform(g, 0.0, 1.0));
  return std::polar(r, uniform(g, 0.0, 2.0 * std::numbers::pi));
}

inline cplx gaussian_c(std::mt19937_64& g) {
  std::normal_distribution<double> n;
  return {n(g), n(g)};
}

// Normalized state with random coefficients on n = 0..support-1.
inline CoefficientState random_state(std::mt19937_64& g, double k, int support,
                                     int truncation) {
  std::vector<cplx> c(truncation + 1, 0.0);
  double s = 0.0;
  for (int n = 0; n < support; ++n) {
    c[n] = gaussian_c(g);
    s += std::norm(c[n]);
  }
  for (auto& x : c) x /= std::sqrt(s);
  return {BargmannIndex{k}, std::move(c)};
}

inline GroupElement random_group_element(std::mt19937_64& g, double tau_max) {
  const double tau = uniform(g, 0.0, tau_max);
  const double phi = uniform(g, 0.0, 2.0 * std::numbers::pi);
  const double psi = uniform(g, 0.0, 2.0 * std::numbers::pi);
  return {std::polar(std::cosh(0.5 * tau), psi),
          std::polar(std::sinh(0.5 * tau), phi)};
}

// Derivatives f^{(j)}(x), j = 0..order, from the Cauchy integral on a circle.
template <typename F>
std::vector<cplx> cauchy_derivatives(F f, cplx x, int order, double radius,
                                     int samples = 64) {
  std::vector<cplx> vals(samples);
  for (int m = 0; m < samples; ++m) {
    vals[m] = f(x + std::polar(radius, 2.0 * std::numbers::pi * m / samples));
  }
  std::vector<cplx> d(order + 1);
  double fact = 1.0;
  for (int j = 0; j <= order; ++j) {
    if (j > 0) fact *= j;
    cplx acc = 0.0;
    for (int m = 0; m < samples; ++m) {
      acc += vals[m] * std::polar(std::pow(radius, -j),
                                  -2.0 * std::numbers::pi * j * m / samples);
    }
    d[j] = fact * acc / static_cast<double>(samples);
  }
  return d;
}

inline double rel_err(cplx a, cplx b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

}  // namespace su11::testing

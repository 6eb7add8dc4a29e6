#pragma once
// numeric.hpp — small numeric helpers shared across modules

#include <cmath>
#include <cstdint>

#include "pdc/errors.hpp"

namespace pdc {

// x^e by repeated squaring; exact sign handling for negative bases.
inline double ipow(double x, int e) {
  if (e < 0) return 1.0 / ipow(x, -e);
  double r = 1.0;
  while (e > 0) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

// Falling factorial n(n-1)...(n-k+1) as a double.
inline double falling_factorial(std::int64_t n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= static_cast<double>(n - i);
  return r;
}

// Binomial coefficient as a double: exact product form for small n, log-gamma
// beyond (values there exceed what integers hold anyway).
inline double binom_real(std::int64_t n, int k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  if (k == 0 || k == n) return 1.0;
  if (n <= 1000) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
    return r;
  }
  return std::exp(std::lgamma(static_cast<double>(n) + 1.0) -
                  std::lgamma(static_cast<double>(k) + 1.0) -
                  std::lgamma(static_cast<double>(n - k) + 1.0));
}

// |a-b| <= tol * max(1, |a|, |b|)
inline bool close_rel(double a, double b, double tol) {
  const double scale = std::fmax(1.0, std::fmax(std::fabs(a), std::fabs(b)));
  return std::fabs(a - b) <= tol * scale;
}

}  // namespace pdc

#pragma once
// irwin_hall.hpp — density, CDF, and window mass of sums of uniforms

namespace pdc {

inline constexpr int kIrwinHallMaxN = 20;

// Density of the sum of ell i.i.d. Uniform[0,1] at x; 0 outside [0, ell].
// Alternating piecewise-polynomial sum with exact integer binomials and
// compensated accumulation; clamped to be nonnegative. ell in 1..20.
double ih_pdf(int ell, double x);

// CDF of the same sum; 0 at x <= 0, 1 at x >= ell, clamped into [0,1].
double ih_cdf(int ell, double x);

// cdf(hi) - cdf(lo), clamped into [0,1]; requires lo <= hi.
double ih_window(int ell, double lo, double hi);

}  // namespace pdc

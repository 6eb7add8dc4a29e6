#include "pdc/irwin_hall.hpp"

#include <array>
#include <cmath>
#include <cstdint>

#include "pdc/errors.hpp"
#include "pdc/numeric.hpp"

namespace pdc {

namespace {

// 20! = 2432902008176640000 < 2^64, so factorials and C(20,k) are exact here.
constexpr std::array<std::uint64_t, kIrwinHallMaxN + 1> factorials() {
  std::array<std::uint64_t, kIrwinHallMaxN + 1> f{};
  f[0] = 1;
  for (int i = 1; i <= kIrwinHallMaxN; ++i)
    f[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i - 1)] * static_cast<std::uint64_t>(i);
  return f;
}

constexpr auto kFact = factorials();

constexpr std::uint64_t binom_u64(int n, int k) {
  return kFact[static_cast<std::size_t>(n)] /
         (kFact[static_cast<std::size_t>(k)] * kFact[static_cast<std::size_t>(n - k)]);
}

void check_ell(int ell) {
  if (ell < 1 || ell > kIrwinHallMaxN)
    throw ValidationError("irwin_hall: ell must be in 1..20");
}

// Compensated alternating sum of (-1)^k C(ell,k) (x-k)^power over k <= floor(x).
double alternating_sum(int ell, double x, int power) {
  double sum = 0.0, comp = 0.0;
  const int kmax = static_cast<int>(std::floor(x));
  for (int k = 0; k <= kmax && k <= ell; ++k) {
    const double term = (k % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(binom_u64(ell, k)) *
                        ipow(x - static_cast<double>(k), power);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace

double ih_pdf(int ell, double x) {
  check_ell(ell);
  if (!(x > 0.0 && x < static_cast<double>(ell))) return 0.0;
  if (ell == 1) return 1.0;
  const double v = alternating_sum(ell, x, ell - 1) /
                   static_cast<double>(kFact[static_cast<std::size_t>(ell - 1)]);
  return v > 0.0 ? v : 0.0;
}

double ih_cdf(int ell, double x) {
  check_ell(ell);
  if (x <= 0.0) return 0.0;
  if (x >= static_cast<double>(ell)) return 1.0;
  const double v =
      alternating_sum(ell, x, ell) / static_cast<double>(kFact[static_cast<std::size_t>(ell)]);
  if (v < 0.0) return 0.0;
  if (v > 1.0) return 1.0;
  return v;
}

double ih_window(int ell, double lo, double hi) {
  check_ell(ell);
  if (!(lo <= hi)) throw ValidationError("ih_window: need lo <= hi");
  const double v = ih_cdf(ell, hi) - ih_cdf(ell, lo);
  if (v < 0.0) return 0.0;
  if (v > 1.0) return 1.0;
  return v;
}

}  // namespace pdc

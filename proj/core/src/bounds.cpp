#include "polycollatz/bounds.hpp"

#include <cmath>

namespace polycollatz {

std::uint64_t isqrt(std::uint64_t n) noexcept {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  // Correct the floating estimate in both directions.
  while (r > 0 && (r > n / r || r * r > n)) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

std::uint64_t ceil_sqrt(std::uint64_t n) noexcept {
  const std::uint64_t r = isqrt(n);
  return r * r == n ? r : r + 1;
}

bool within_main_bound(std::uint64_t t, std::uint64_t d) noexcept {
  if (t <= d) return true;
  const std::uint64_t excess = t - d;
  return excess * excess <= 8 * d * d * d;
}

std::uint64_t main_bound_ceil(std::uint64_t d) noexcept { return ceil_sqrt(8 * d * d * d) + d; }

std::uint64_t quadratic_bound(std::uint64_t d) noexcept { return d * d + 2 * d; }

bool within_s3_bound(std::uint64_t t, std::uint64_t d) noexcept { return t * t <= 2 * d * d * d; }

std::uint64_t s3_bound_ceil(std::uint64_t d) noexcept { return ceil_sqrt(2 * d * d * d); }

double main_bound_real(std::uint64_t d) noexcept {
  const double two_d = 2.0 * static_cast<double>(d);
  return two_d * std::sqrt(two_d) + static_cast<double>(d);
}

std::uint64_t fp_pre_period_bound(std::uint64_t p, std::uint64_t d) noexcept {
  return p * (d * d + d) - d;
}

}  // namespace polycollatz

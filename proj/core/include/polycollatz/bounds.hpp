#pragma once

#include <cstdint>

namespace polycollatz {

/// floor(sqrt(n)) for 64-bit n, exact.
std::uint64_t isqrt(std::uint64_t n) noexcept;
/// ceil(sqrt(n)) for 64-bit n, exact.
std::uint64_t ceil_sqrt(std::uint64_t n) noexcept;

// Stopping-time bounds for a polynomial of degree d. The real-valued bounds
// are compared exactly by squaring, never through floating point.

/// t <= (2d)^1.5 + d
bool within_main_bound(std::uint64_t t, std::uint64_t d) noexcept;
/// ceil((2d)^1.5) + d
std::uint64_t main_bound_ceil(std::uint64_t d) noexcept;
/// d^2 + 2d, the older quadratic bound.
std::uint64_t quadratic_bound(std::uint64_t d) noexcept;
/// t <= sqrt(2) · d^1.5, the bound on t_min(f, S3) for odd f.
bool within_s3_bound(std::uint64_t t, std::uint64_t d) noexcept;
/// ceil(sqrt(2) · d^1.5)
std::uint64_t s3_bound_ceil(std::uint64_t d) noexcept;
/// (2d)^1.5 + d as a double, for reporting margins only.
double main_bound_real(std::uint64_t d) noexcept;
/// p(d^2 + d) - d, the pre-period bound for the F_p map.
std::uint64_t fp_pre_period_bound(std::uint64_t p, std::uint64_t d) noexcept;

}  // namespace polycollatz

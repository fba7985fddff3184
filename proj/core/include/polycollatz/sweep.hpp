#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polycollatz/gf2_poly.hpp"

namespace polycollatz {

inline constexpr std::size_t kDefaultDegreeCap = 24;
/// Hard ceiling for any configured cap: degree-d sweeps enumerate 2^d masks.
inline constexpr std::size_t kMaxDegreeCap = 40;

/// POLY_COLLATZ_CAP when set to an integer in [0, kMaxDegreeCap], otherwise
/// the default. Throws InvalidArgument for a malformed value.
std::size_t degree_cap_from_env();

struct SweepOptions {
  std::size_t threads = 1;
  std::size_t cap = kDefaultDegreeCap;
  /// Recompute every stopping time with the direct T engine and fail on any
  /// disagreement with the reduced engine.
  bool cross_check = false;
};

/// Aggregate over all 2^d polynomials of degree exactly d.
struct SweepRow {
  std::size_t d = 0;
  std::uint64_t count = 0;
  /// max t_min
  std::uint64_t sigma = 0;
  /// Exact sum of t_min; rho = rho_sum / count.
  std::uint64_t rho_sum = 0;
  /// Smallest polynomial (by hex encoding) attaining sigma.
  Gf2Poly argmax;
  /// Number of polynomials checked by the direct engine (0 unless cross_check).
  std::uint64_t cross_checked = 0;

  /// rho rounded half-to-even to six decimals.
  std::string rho_decimal() const;
  /// (2d)^1.5 + d - sigma, six decimals.
  std::string bound_margin_decimal() const;
  /// Exact test of sigma <= (2d)^1.5 + d.
  bool within_bound() const noexcept;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// One row per degree in [d_min, d_max], computed with the reduced engine.
/// Work is split into static contiguous ranges of the low-bit masks and
/// merged with max and integer sums, so the result does not depend on the
/// thread count. Throws CapExceeded when d_max exceeds options.cap.
std::vector<SweepRow> sweep(std::size_t d_min, std::size_t d_max, const SweepOptions& options = {});

/// num/den rounded half-to-even to `places` decimals, exact.
std::string rational_decimal(std::uint64_t num, std::uint64_t den, int places);

/// d,count,sigma,rho,argmax_hex,bound_margin
std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string sweep_json(const std::vector<SweepRow>& rows);

/// Descriptive growth ratios per degree. Ratios that divide by zero (d = 0,
/// or ln d = 0 at d = 1) are absent.
struct GrowthRow {
  std::size_t d = 0;
  std::optional<double> sigma_over_d;
  std::optional<double> sigma_over_d_log_d;
  std::optional<double> sigma_over_d_1_5;
  std::optional<double> rho_over_d;
};

/// Requires at least three rows.
std::vector<GrowthRow> growth_report(const std::vector<SweepRow>& rows);
std::string growth_csv(const std::vector<GrowthRow>& rows);
std::string growth_json(const std::vector<GrowthRow>& rows);

}  // namespace polycollatz

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polycollatz/fp_poly.hpp"

namespace polycollatz {

/// The Collatz map on F_p[x]: f·(x+1) - f_0 when the constant term f_0 is
/// nonzero, f/x otherwise. For p = 2 this is the F_2 map T.
/// Throws ZeroInput on 0.
FpPoly fp_step(const FpPoly& f);

struct FpStoppingResult {
  /// Minimal k with T^k(f) periodic.
  std::size_t pre_period = 0;
  std::size_t cycle_length = 1;
  /// T^pre_period(f), the first periodic element on the orbit.
  FpPoly cycle_entry{2};
};

/// Step budget covering the pre-period bound p(d^2+d)-d plus room for the
/// cycle itself.
std::size_t fp_default_budget(std::uint32_t p, std::size_t degree);

/// Finds the first repeated state by recording every visited polynomial
/// exactly. Throws ZeroInput, or BudgetExhausted when no repeat shows up
/// within `budget` steps.
FpStoppingResult fp_stopping_time(const FpPoly& f, std::optional<std::size_t> budget = std::nullopt);

/// Brent's constant-memory cycle detection; must agree with fp_stopping_time.
FpStoppingResult fp_stopping_time_brent(const FpPoly& f,
                                        std::optional<std::size_t> budget = std::nullopt);

struct FpBoundRow {
  std::uint32_t p = 2;
  std::size_t d = 0;
  std::uint64_t count = 0;
  std::size_t max_pre_period = 0;
  std::uint64_t bound = 0;
  std::uint64_t violations = 0;
  /// Cycle lengths observed at this degree, ascending and distinct.
  std::vector<std::size_t> cycle_lengths;
};

/// Every nonzero f of degree <= d_max, one row per exact degree. Throws
/// InvalidArgument for a non-prime p and CapExceeded when a degree would
/// require more than 2^24 orbits.
std::vector<FpBoundRow> fp_bound_sweep(std::uint32_t p, std::size_t d_max);

/// [{"p":3,"d":4,"count":...,"max_pre_period":...,"bound":...}, ...]
std::string fp_bound_json(const std::vector<FpBoundRow>& rows);

}  // namespace polycollatz

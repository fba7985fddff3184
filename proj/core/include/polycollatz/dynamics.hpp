#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polycollatz/gf2_poly.hpp"

namespace polycollatz {

/// The polynomial Collatz map and its auxiliary maps on F_2[x]:
///
///   T   odd f -> (1+x)f + 1, even f -> f/x
///   T1  f -> (1+x)f + 1
///   T2  f -> f / x^r with r maximal (T2(0) = 0)
///   T3  T2 after T1
///   S1  f -> (x+1)f
///   S2  f -> f with its leading term removed
///   S3  S2 after S1
///
/// T3 and S3 are conjugate under coefficient reversal, which is what lets the
/// reduced engine compute T stopping times by iterating S3 on reverse(f).
enum class MapKind { T, T1, T2, T3, S1, S2, S3 };

std::string_view to_string(MapKind map) noexcept;
std::optional<MapKind> parse_map_kind(std::string_view name) noexcept;

/// One application of `map`. Throws ZeroInput on 0 except for T2 (T2(0) = 0).
Gf2Poly step(const Gf2Poly& f, MapKind map);

struct Trajectory {
  MapKind map = MapKind::T;
  /// steps[0] is the input; steps[i+1] = map(steps[i]).
  std::vector<Gf2Poly> steps;
  /// Set when the budget ran out before the orbit reached 1.
  bool truncated = false;

  /// Index of the terminal 1, when the orbit reached it.
  std::optional<std::size_t> t_min() const;
};

/// Iterates until reaching 1 or spending `budget` steps. An orbit that hits 0
/// (possible under S2 only) ends there, untruncated.
Trajectory trajectory(const Gf2Poly& f, MapKind map, std::size_t budget);

/// {"map":"T","input":"0x5","steps":["0x5",...],"t_min":6,"truncated":false}
std::string trajectory_json(const Trajectory& traj);

enum class Method { Direct, Reduced };
std::string_view to_string(Method method) noexcept;

struct StoppingResult {
  std::size_t t_min = 0;
  Method method = Method::Direct;
  /// Step budget in force, in T-steps for the reduced engine.
  std::size_t budget_used = 0;
};

/// Which kernel the engines may use. Auto picks the single-word kernel when
/// every iterate provably fits in 64 bits.
enum class Kernel { Auto, Generic };

/// Stopping-time bound plus slack, so that exhausting it signals a defect:
/// T: ceil((2d)^1.5) + d + 4, S3: ceil(sqrt(2)·d^1.5) + 4,
/// T3: the S3 budget at degree d + 1 plus one step. Other maps use the T budget.
std::size_t default_budget(MapKind map, std::size_t degree);

/// Minimal k >= 0 with map^k(f) = 1, by iteration with O(1) stored state.
/// Throws ZeroInput for f = 0 (or when the orbit reaches 0), BudgetExhausted
/// when the budget runs out.
StoppingResult stopping_time_direct(const Gf2Poly& f, MapKind map,
                                    std::optional<std::size_t> budget = std::nullopt,
                                    Kernel kernel = Kernel::Auto);

/// t_min(f) under T without running T: strip f = x^r·g, iterate S3 from
/// reverse(g) for k steps until 1, and return r + 2k + deg(g).
StoppingResult stopping_time_reduced(const Gf2Poly& f, Kernel kernel = Kernel::Auto);

/// For odd f: checks t_min(f) = 2·t_min(f, T3) + deg(f) and that
/// reverse(T3^i(f)) = S3^i(reverse(f)) along the whole T3 orbit.
/// Throws EvenInput for even f (including 0).
bool t3_equivalence_check(const Gf2Poly& f);

namespace kernels {

/// Reduced-engine stopping time of a nonzero word polynomial; nullopt when
/// the S3 iteration exceeds `s3_budget` steps.
std::optional<std::uint32_t> reduced_stopping_time_word(std::uint64_t f,
                                                        std::uint32_t s3_budget) noexcept;

/// One S3 step on an odd word: h + x·(h - leading term).
constexpr std::uint64_t s3_step_word(std::uint64_t h) noexcept {
  return h ^ ((h ^ std::bit_floor(h)) << 1);
}

/// Direct T iteration on a word; nullopt if an iterate would leave 64 bits or
/// the budget runs out.
std::optional<std::uint32_t> direct_stopping_time_word(std::uint64_t f,
                                                       std::uint32_t budget) noexcept;

}  // namespace kernels

}  // namespace polycollatz

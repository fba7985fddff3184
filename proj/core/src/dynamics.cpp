#include "polycollatz/dynamics.hpp"

#include <bit>
#include <limits>

#include "polycollatz/bounds.hpp"
#include "polycollatz/error.hpp"

namespace polycollatz {
namespace {

constexpr std::string_view kZeroStopping = "zero polynomial has no stopping time";

// In-place single steps shared by step() and the iteration loops.
void apply_t(Gf2Poly& f) {
  if (f.is_odd()) {
    f.mul_x_plus_1_assign();
    f.toggle(0);
  } else {
    f.shift_right_assign(1);
  }
}

void apply_t1(Gf2Poly& f) {
  f.mul_x_plus_1_assign();
  f.toggle(0);
}

void apply_t2(Gf2Poly& f) { f.shift_right_assign(f.trailing_zeros()); }

void apply_s3(Gf2Poly& f) {
  f.mul_x_plus_1_assign();
  f.drop_leading_term();
}

void apply(Gf2Poly& f, MapKind map) {
  if (f.is_zero()) {
    if (map == MapKind::T2) return;
    throw Error(ErrorCode::ZeroInput,
                std::string("map ") + std::string(to_string(map)) + " is undefined at 0");
  }
  switch (map) {
    case MapKind::T: apply_t(f); return;
    case MapKind::T1: apply_t1(f); return;
    case MapKind::T2: apply_t2(f); return;
    case MapKind::T3:
      apply_t1(f);
      apply_t2(f);
      return;
    case MapKind::S1: f.mul_x_plus_1_assign(); return;
    case MapKind::S2: f.drop_leading_term(); return;
    case MapKind::S3: apply_s3(f); return;
  }
}

std::uint64_t reverse_word(std::uint64_t g) noexcept {
  // g is odd; its reversal occupies the same deg+1 low bits.
  std::uint64_t r = 0;
  const int width = std::bit_width(g);
  for (int i = 0; i < width; ++i) r |= ((g >> i) & 1u) << (width - 1 - i);
  return r;
}

std::size_t degree_of(const Gf2Poly& f) { return f.degree().value(); }

}  // namespace

std::string_view to_string(MapKind map) noexcept {
  switch (map) {
    case MapKind::T: return "T";
    case MapKind::T1: return "T1";
    case MapKind::T2: return "T2";
    case MapKind::T3: return "T3";
    case MapKind::S1: return "S1";
    case MapKind::S2: return "S2";
    case MapKind::S3: return "S3";
  }
  return "?";
}

std::optional<MapKind> parse_map_kind(std::string_view name) noexcept {
  for (MapKind m : {MapKind::T, MapKind::T1, MapKind::T2, MapKind::T3, MapKind::S1, MapKind::S2,
                    MapKind::S3}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::string_view to_string(Method method) noexcept {
  return method == Method::Direct ? "direct" : "reduced";
}

Gf2Poly step(const Gf2Poly& f, MapKind map) {
  Gf2Poly out = f;
  apply(out, map);
  return out;
}

std::optional<std::size_t> Trajectory::t_min() const {
  if (truncated || steps.empty() || !steps.back().is_one()) return std::nullopt;
  return steps.size() - 1;
}

Trajectory trajectory(const Gf2Poly& f, MapKind map, std::size_t budget) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "trajectory of the zero polynomial");
  if (budget == 0) throw Error(ErrorCode::InvalidArgument, "trajectory budget must be at least 1");
  Trajectory traj;
  traj.map = map;
  traj.steps.push_back(f);
  Gf2Poly cur = f;
  while (!cur.is_one()) {
    if (cur.is_zero()) return traj;
    if (traj.steps.size() - 1 == budget) {
      traj.truncated = true;
      return traj;
    }
    apply(cur, map);
    traj.steps.push_back(cur);
  }
  return traj;
}

std::string trajectory_json(const Trajectory& traj) {
  std::string out = "{\"map\":\"";
  out += to_string(traj.map);
  out += "\",\"input\":\"";
  out += traj.steps.empty() ? std::string("0x0") : to_hex(traj.steps.front());
  out += "\",\"steps\":[";
  for (std::size_t i = 0; i < traj.steps.size(); ++i) {
    if (i != 0) out += ',';
    out += '"' + to_hex(traj.steps[i]) + '"';
  }
  out += "],\"t_min\":";
  const auto t = traj.t_min();
  out += t ? std::to_string(*t) : std::string("null");
  out += ",\"truncated\":";
  out += traj.truncated ? "true" : "false";
  out += '}';
  return out;
}

std::size_t default_budget(MapKind map, std::size_t degree) {
  const auto d = static_cast<std::uint64_t>(degree);
  switch (map) {
    case MapKind::S3: return static_cast<std::size_t>(s3_bound_ceil(d) + 4);
    case MapKind::T3: return static_cast<std::size_t>(s3_bound_ceil(d + 1) + 5);
    default: return static_cast<std::size_t>(main_bound_ceil(d) + 4);
  }
}

namespace kernels {

std::optional<std::uint32_t> reduced_stopping_time_word(std::uint64_t f,
                                                        std::uint32_t s3_budget) noexcept {
  const int r = std::countr_zero(f);
  const std::uint64_t g = f >> r;
  const int deg = std::bit_width(g) - 1;
  std::uint64_t h = reverse_word(g);
  std::uint32_t k = 0;
  while (h != 1) {
    if (k == s3_budget) return std::nullopt;
    h = s3_step_word(h);
    ++k;
  }
  return static_cast<std::uint32_t>(r) + 2 * k + static_cast<std::uint32_t>(deg);
}

std::optional<std::uint32_t> direct_stopping_time_word(std::uint64_t f,
                                                       std::uint32_t budget) noexcept {
  constexpr std::uint64_t kTopBit = std::uint64_t{1} << 63;
  std::uint32_t k = 0;
  while (f != 1) {
    if (k == budget) return std::nullopt;
    if (f & 1u) {
      if (f & kTopBit) return std::nullopt;
      f = f ^ (f << 1) ^ 1u;
    } else {
      f >>= 1;
    }
    ++k;
  }
  return k;
}

}  // namespace kernels

StoppingResult stopping_time_direct(const Gf2Poly& f, MapKind map,
                                    std::optional<std::size_t> budget, Kernel kernel) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, std::string(kZeroStopping));
  const std::size_t limit = budget.value_or(default_budget(map, degree_of(f)));
  StoppingResult result{0, Method::Direct, limit};

  if (kernel == Kernel::Auto && map == MapKind::T && limit <= std::numeric_limits<std::uint32_t>::max()) {
    if (const auto word = f.to_word()) {
      if (auto t = kernels::direct_stopping_time_word(*word, static_cast<std::uint32_t>(limit))) {
        result.t_min = *t;
        return result;
      }
      // Overflowed a word or ran out of budget; the generic loop decides which.
    }
  }

  Gf2Poly cur = f;
  std::size_t k = 0;
  while (!cur.is_one()) {
    if (cur.is_zero()) {
      throw Error(ErrorCode::ZeroInput, "orbit under " + std::string(to_string(map)) +
                                            " reached 0 before reaching 1");
    }
    if (k == limit) {
      throw Error(ErrorCode::BudgetExhausted,
                  "budget of " + std::to_string(limit) + " steps exhausted under " +
                      std::string(to_string(map)) + " for " + to_hex(f));
    }
    apply(cur, map);
    ++k;
  }
  result.t_min = k;
  return result;
}

StoppingResult stopping_time_reduced(const Gf2Poly& f, Kernel kernel) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, std::string(kZeroStopping));
  const std::size_t r = f.trailing_zeros();
  const std::size_t deg_odd = degree_of(f) - r;
  const std::size_t s3_budget = default_budget(MapKind::S3, deg_odd);
  StoppingResult result{0, Method::Reduced, r + 2 * s3_budget + deg_odd};

  if (kernel == Kernel::Auto) {
    if (const auto word = f.to_word()) {
      const auto t = kernels::reduced_stopping_time_word(*word, static_cast<std::uint32_t>(s3_budget));
      if (!t) {
        throw Error(ErrorCode::BudgetExhausted, "S3 budget exhausted for " + to_hex(f));
      }
      result.t_min = *t;
      return result;
    }
  }

  Gf2Poly h = reverse(strip_x(f).odd_part);
  std::size_t k = 0;
  while (!h.is_one()) {
    if (k == s3_budget) {
      throw Error(ErrorCode::BudgetExhausted, "S3 budget exhausted for " + to_hex(f));
    }
    apply_s3(h);
    ++k;
  }
  result.t_min = r + 2 * k + deg_odd;
  return result;
}

bool t3_equivalence_check(const Gf2Poly& f) {
  if (!f.is_odd()) {
    throw Error(ErrorCode::EvenInput, "t3_equivalence_check requires an odd polynomial");
  }
  const std::size_t deg = degree_of(f);
  const std::size_t t_direct = stopping_time_direct(f, MapKind::T, std::nullopt, Kernel::Generic).t_min;

  Gf2Poly t3_iter = f;
  Gf2Poly s3_iter = reverse(f);
  const std::size_t budget = default_budget(MapKind::T3, deg);
  std::size_t k = 0;
  while (true) {
    if (reverse(t3_iter) != s3_iter) return false;
    if (t3_iter.is_one() != s3_iter.is_one()) return false;
    if (t3_iter.is_one()) break;
    if (k == budget) return false;
    apply_t1(t3_iter);
    apply_t2(t3_iter);
    apply_s3(s3_iter);
    ++k;
  }
  return t_direct == 2 * k + deg;
}

}  // namespace polycollatz

#include "polycollatz/fp_dynamics.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "polycollatz/bounds.hpp"
#include "polycollatz/error.hpp"

namespace polycollatz {
namespace {

void apply_fp(FpPoly& f) {
  const FpPoly::Residue f0 = f.constant_term();
  if (f0 != 0) {
    f.mul_x_plus_1_assign();
    f.sub_constant_assign(f0);
  } else {
    f.div_x_assign();
  }
}

[[noreturn]] void budget_exhausted(const FpPoly& f, std::size_t limit) {
  throw Error(ErrorCode::BudgetExhausted, "no repeated state within " + std::to_string(limit) +
                                              " steps for " + format_fp(f) + " mod " +
                                              std::to_string(f.modulus()));
}

}  // namespace

FpPoly fp_step(const FpPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "the F_p map is undefined at 0");
  FpPoly out = f;
  apply_fp(out);
  return out;
}

std::size_t fp_default_budget(std::uint32_t p, std::size_t degree) {
  const auto d = static_cast<std::uint64_t>(degree);
  return static_cast<std::size_t>(2 * fp_pre_period_bound(p, d) + 64 * static_cast<std::uint64_t>(p) * (d + 2));
}

FpStoppingResult fp_stopping_time(const FpPoly& f, std::optional<std::size_t> budget) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "zero polynomial has no stopping time");
  const std::size_t limit = budget.value_or(fp_default_budget(f.modulus(), f.degree().value()));
  std::unordered_map<FpPoly, std::size_t, FpPolyHash> first_seen;
  FpPoly cur = f;
  for (std::size_t k = 0;; ++k) {
    const auto [it, inserted] = first_seen.emplace(cur, k);
    if (!inserted) {
      return FpStoppingResult{it->second, k - it->second, it->first};
    }
    if (k == limit) budget_exhausted(f, limit);
    apply_fp(cur);
  }
}

FpStoppingResult fp_stopping_time_brent(const FpPoly& f, std::optional<std::size_t> budget) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "zero polynomial has no stopping time");
  const std::size_t limit = budget.value_or(fp_default_budget(f.modulus(), f.degree().value()));

  // Cycle length: the hare walks ahead, the tortoise teleports at powers of two.
  std::size_t power = 1;
  std::size_t lambda = 1;
  std::size_t steps = 0;
  FpPoly tortoise = f;
  FpPoly hare = fp_step(f);
  while (tortoise != hare) {
    if (++steps > 2 * limit) budget_exhausted(f, limit);
    if (power == lambda) {
      tortoise = hare;
      power *= 2;
      lambda = 0;
    }
    apply_fp(hare);
    ++lambda;
  }

  // Pre-period: two walkers lambda apart meet at the first periodic element.
  FpPoly lead = f;
  for (std::size_t i = 0; i < lambda; ++i) apply_fp(lead);
  FpPoly trail = f;
  std::size_t mu = 0;
  while (trail != lead) {
    if (mu == limit) budget_exhausted(f, limit);
    apply_fp(trail);
    apply_fp(lead);
    ++mu;
  }
  return FpStoppingResult{mu, lambda, trail};
}

std::vector<FpBoundRow> fp_bound_sweep(std::uint32_t p, std::size_t d_max) {
  if (!is_prime(p) || p >= (1u << 16)) {
    throw Error(ErrorCode::InvalidArgument, "fp sweep requires a prime modulus below 65536");
  }
  std::uint64_t count = p - 1;
  for (std::size_t d = 0; d < d_max; ++d) {
    count *= p;
    if (count > (std::uint64_t{1} << 24)) {
      throw Error(ErrorCode::CapExceeded, "fp sweep at degree " + std::to_string(d + 1) +
                                              " would exceed 2^24 polynomials");
    }
  }

  std::vector<FpBoundRow> rows;
  for (std::size_t d = 0; d <= d_max; ++d) {
    FpBoundRow row;
    row.p = p;
    row.d = d;
    row.bound = fp_pre_period_bound(p, d);
    std::set<std::size_t> cycles;
    for_each_fp_of_degree(p, d, [&](const FpPoly& f) {
      const auto res = fp_stopping_time(f);
      ++row.count;
      row.max_pre_period = std::max(row.max_pre_period, res.pre_period);
      if (res.pre_period > row.bound) ++row.violations;
      cycles.insert(res.cycle_length);
    });
    row.cycle_lengths.assign(cycles.begin(), cycles.end());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string fp_bound_json(const std::vector<FpBoundRow>& rows) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (i != 0) out << ',';
    out << "{\"p\":" << r.p << ",\"d\":" << r.d << ",\"count\":" << r.count
        << ",\"max_pre_period\":" << r.max_pre_period << ",\"bound\":" << r.bound
        << ",\"violations\":" << r.violations << ",\"cycle_lengths\":[";
    for (std::size_t j = 0; j < r.cycle_lengths.size(); ++j) {
      if (j != 0) out << ',';
      out << r.cycle_lengths[j];
    }
    out << "]}";
  }
  out << "]\n";
  return out.str();
}

}  // namespace polycollatz

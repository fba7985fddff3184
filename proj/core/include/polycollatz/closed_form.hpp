#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polycollatz/gf2_poly.hpp"

namespace polycollatz {

/// Parameters of f_{a,b,n} = (x^a (x+1)^b)^n + 1. Requires (a, b) != (0, 0)
/// and n >= 1.
struct FamilyParams {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t n = 1;

  /// Throws InvalidArgument when the invariants fail or n(a+b) would not fit
  /// comfortably in 62 bits.
  void validate() const;
};

/// x^(an) · (x+1)^(bn) + 1, built exactly.
Gf2Poly family_poly(const FamilyParams& p);

/// t_min((x+1)^n, S3) = 2^d - n with 2^(d-1) <= n < 2^d. Requires n >= 1.
std::uint64_t s3_time_of_pow(std::uint64_t n);

/// The unique d (possibly -1) with 2^d < m <= 2^(d+1), for m >= 1.
int family_scale_exponent(std::uint64_t m);

/// t_min(f_{a,b,n}) = 2^(d+2) + (a-b)n with 2^d < n(a+b) <= 2^(d+1).
std::uint64_t family_stopping_time(const FamilyParams& p);

/// Compares family_stopping_time with the reduction
/// 2·s3_time_of_pow(na+nb-1) + 3na + nb - 2. Throws DomainTooSmall when
/// n(a+b) = 1, where the reduction's hypotheses fail.
bool fab_reduce_check(const FamilyParams& p);

/// A maximal run of n over which t_min(f_{a,b,n}) is arithmetic with common
/// difference a - b.
struct ApRun {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  int d = 0;
  std::uint64_t n_start = 0;
  std::uint64_t n_end = 0;
  std::int64_t common_difference = 0;
  std::vector<std::uint64_t> values;

  std::uint64_t length() const noexcept { return n_end - n_start + 1; }
};

/// floor(2^(d+1)/(a+b)) - floor(2^d/(a+b)).
std::uint64_t ap_run_length(std::uint64_t a, std::uint64_t b, int d);

/// One run per d in [d_min, d_max], over n in [floor(2^d/(a+b)) + 1,
/// floor(2^(d+1)/(a+b))]. Requires 2^d_min >= a+b and d_max <= 40. Each run is
/// checked for a constant difference before it is returned.
std::vector<ApRun> ap_runs(std::uint64_t a, std::uint64_t b, int d_min, int d_max);

/// a,b,d,n_start,n_end,diff,first_value,length
std::string ap_runs_csv(const std::vector<ApRun>& runs);
std::string ap_runs_json(const std::vector<ApRun>& runs);

}  // namespace polycollatz

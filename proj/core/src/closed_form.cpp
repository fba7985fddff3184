#include "polycollatz/closed_form.hpp"

#include <bit>
#include <sstream>

#include "polycollatz/error.hpp"

namespace polycollatz {

void FamilyParams::validate() const {
  if (a == 0 && b == 0) throw Error(ErrorCode::InvalidArgument, "family requires a > 0 or b > 0");
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "family requires n >= 1");
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 31;
  if (a >= kLimit || b >= kLimit || n >= kLimit || n * (a + b) >= (std::uint64_t{1} << 60)) {
    throw Error(ErrorCode::InvalidArgument, "family parameters too large");
  }
}

Gf2Poly family_poly(const FamilyParams& p) {
  p.validate();
  if (p.n * (p.a + p.b) > (std::uint64_t{1} << 26)) {
    throw Error(ErrorCode::InvalidArgument, "family polynomial degree too large to build");
  }
  Gf2Poly f = pow_x_plus_1(p.b * p.n);
  f.shift_left_assign(static_cast<std::size_t>(p.a * p.n));
  f.toggle(0);
  return f;
}

std::uint64_t s3_time_of_pow(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "s3_time_of_pow requires n >= 1");
  if (n >= (std::uint64_t{1} << 63)) throw Error(ErrorCode::InvalidArgument, "n too large");
  return std::bit_ceil(n + 1) - n;
}

int family_scale_exponent(std::uint64_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "scale exponent requires m >= 1");
  return std::bit_width(m - 1) - 1;
}

std::uint64_t family_stopping_time(const FamilyParams& p) {
  p.validate();
  const std::uint64_t m = p.n * (p.a + p.b);
  const int d = family_scale_exponent(m);
  const auto base = static_cast<std::int64_t>(std::uint64_t{1} << (d + 2));
  const std::int64_t diff = static_cast<std::int64_t>(p.a) - static_cast<std::int64_t>(p.b);
  return static_cast<std::uint64_t>(base + diff * static_cast<std::int64_t>(p.n));
}

bool fab_reduce_check(const FamilyParams& p) {
  p.validate();
  const std::uint64_t m = p.n * (p.a + p.b);
  if (m < 2) {
    throw Error(ErrorCode::DomainTooSmall,
                "reduction needs n(a+b) >= 2; (x+1)^0 is outside its hypotheses");
  }
  const std::uint64_t rhs = 2 * s3_time_of_pow(m - 1) + 3 * p.n * p.a + p.n * p.b - 2;
  return family_stopping_time(p) == rhs;
}

std::uint64_t ap_run_length(std::uint64_t a, std::uint64_t b, int d) {
  if (a + b == 0) throw Error(ErrorCode::InvalidArgument, "ap runs require a > 0 or b > 0");
  if (d < 0 || d > 61) throw Error(ErrorCode::InvalidArgument, "scale exponent out of range");
  const std::uint64_t s = a + b;
  return ((std::uint64_t{1} << (d + 1)) / s) - ((std::uint64_t{1} << d) / s);
}

std::vector<ApRun> ap_runs(std::uint64_t a, std::uint64_t b, int d_min, int d_max) {
  if (a + b == 0) throw Error(ErrorCode::InvalidArgument, "ap runs require a > 0 or b > 0");
  if (d_min < 0 || d_max < d_min || d_max > 40) {
    throw Error(ErrorCode::InvalidArgument, "ap runs require 0 <= d_min <= d_max <= 40");
  }
  const std::uint64_t s = a + b;
  if ((std::uint64_t{1} << d_min) < s) {
    throw Error(ErrorCode::InvalidArgument, "ap runs require d_min >= log2(a+b)");
  }
  std::vector<ApRun> runs;
  for (int d = d_min; d <= d_max; ++d) {
    ApRun run;
    run.a = a;
    run.b = b;
    run.d = d;
    run.n_start = (std::uint64_t{1} << d) / s + 1;
    run.n_end = (std::uint64_t{1} << (d + 1)) / s;
    run.common_difference = static_cast<std::int64_t>(a) - static_cast<std::int64_t>(b);
    run.values.reserve(run.length());
    for (std::uint64_t n = run.n_start; n <= run.n_end; ++n) {
      run.values.push_back(family_stopping_time({a, b, n}));
    }
    for (std::size_t i = 1; i < run.values.size(); ++i) {
      const auto step = static_cast<std::int64_t>(run.values[i] - run.values[i - 1]);
      if (step != run.common_difference) {
        throw Error(ErrorCode::InternalMismatch,
                    "run at d=" + std::to_string(d) + " is not arithmetic");
      }
    }
    runs.push_back(std::move(run));
  }
  return runs;
}

std::string ap_runs_csv(const std::vector<ApRun>& runs) {
  std::ostringstream out;
  out << "a,b,d,n_start,n_end,diff,first_value,length\n";
  for (const auto& r : runs) {
    out << r.a << ',' << r.b << ',' << r.d << ',' << r.n_start << ',' << r.n_end << ','
        << r.common_difference << ',' << r.values.front() << ',' << r.length() << '\n';
  }
  return out.str();
}

std::string ap_runs_json(const std::vector<ApRun>& runs) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto& r = runs[i];
    if (i != 0) out << ',';
    out << "{\"a\":" << r.a << ",\"b\":" << r.b << ",\"d\":" << r.d << ",\"n_start\":" << r.n_start
        << ",\"n_end\":" << r.n_end << ",\"diff\":" << r.common_difference
        << ",\"first_value\":" << r.values.front() << ",\"length\":" << r.length() << '}';
  }
  out << "]\n";
  return out.str();
}

}  // namespace polycollatz

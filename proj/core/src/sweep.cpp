#include "polycollatz/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <thread>

#include "polycollatz/bounds.hpp"
#include "polycollatz/dynamics.hpp"
#include "polycollatz/error.hpp"

namespace polycollatz {
namespace {

__extension__ typedef unsigned __int128 Wide;

struct Partial {
  std::uint64_t sigma = 0;
  std::uint64_t argmax = 0;
  std::uint64_t sum = 0;
  std::uint64_t checked = 0;
  std::optional<std::string> failure;
};

void merge(Partial& into, const Partial& from) {
  if (from.sigma > into.sigma || (from.sigma == into.sigma && from.argmax < into.argmax)) {
    into.sigma = from.sigma;
    into.argmax = from.argmax;
  }
  into.sum += from.sum;
  into.checked += from.checked;
  if (!into.failure && from.failure) into.failure = from.failure;
}

// Scans f = x^d + lo for lo in [begin, end).
Partial scan_range(std::size_t d, std::uint64_t begin, std::uint64_t end, bool cross_check) {
  Partial part;
  part.argmax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t lead = std::uint64_t{1} << d;
  const auto s3_budget = static_cast<std::uint32_t>(default_budget(MapKind::S3, d));
  const auto t_budget = static_cast<std::uint32_t>(default_budget(MapKind::T, d));
  for (std::uint64_t lo = begin; lo < end; ++lo) {
    const std::uint64_t f = lead | lo;
    const auto t = kernels::reduced_stopping_time_word(f, s3_budget);
    if (!t) {
      if (!part.failure) part.failure = "S3 budget exhausted for " + to_hex(Gf2Poly::from_word(f));
      continue;
    }
    if (cross_check) {
      auto direct = kernels::direct_stopping_time_word(f, t_budget);
      if (!direct) {
        direct = static_cast<std::uint32_t>(
            stopping_time_direct(Gf2Poly::from_word(f), MapKind::T, std::nullopt, Kernel::Generic).t_min);
      }
      ++part.checked;
      if (*direct != *t && !part.failure) {
        part.failure = "direct/reduced mismatch for " + to_hex(Gf2Poly::from_word(f)) + ": " +
                       std::to_string(*direct) + " vs " + std::to_string(*t);
      }
    }
    part.sum += *t;
    if (*t > part.sigma || (*t == part.sigma && f < part.argmax)) {
      part.sigma = *t;
      part.argmax = f;
    }
  }
  return part;
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string optional_number(const std::optional<double>& v, const char* missing) {
  return v ? fixed6(*v) : std::string(missing);
}

}  // namespace

std::size_t degree_cap_from_env() {
  const char* raw = std::getenv("POLY_COLLATZ_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultDegreeCap;
  const std::string_view text(raw);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value > kMaxDegreeCap) {
    throw Error(ErrorCode::InvalidArgument, "POLY_COLLATZ_CAP must be an integer in [0, " +
                                                std::to_string(kMaxDegreeCap) + "]");
  }
  return value;
}

std::string SweepRow::rho_decimal() const { return rational_decimal(rho_sum, count, 6); }

std::string SweepRow::bound_margin_decimal() const {
  return fixed6(main_bound_real(d) - static_cast<double>(sigma));
}

bool SweepRow::within_bound() const noexcept { return within_main_bound(sigma, d); }

std::vector<SweepRow> sweep(std::size_t d_min, std::size_t d_max, const SweepOptions& options) {
  if (d_min > d_max) throw Error(ErrorCode::InvalidArgument, "sweep requires d_min <= d_max");
  const std::size_t cap = std::min(options.cap, kMaxDegreeCap);
  if (d_max > cap) {
    throw Error(ErrorCode::CapExceeded, "degree " + std::to_string(d_max) +
                                            " exceeds the safety cap " + std::to_string(cap));
  }
  const std::size_t threads = std::max<std::size_t>(1, options.threads);

  std::vector<SweepRow> rows;
  for (std::size_t d = d_min; d <= d_max; ++d) {
    const std::uint64_t total = std::uint64_t{1} << d;
    const std::uint64_t chunks = std::min<std::uint64_t>(threads, total);
    std::vector<Partial> parts(chunks);
    auto bounds_of = [&](std::uint64_t c) {
      return std::pair{total * c / chunks, total * (c + 1) / chunks};
    };
    if (chunks == 1) {
      parts[0] = scan_range(d, 0, total, options.cross_check);
    } else {
      std::vector<std::jthread> workers;
      workers.reserve(chunks);
      for (std::uint64_t c = 0; c < chunks; ++c) {
        workers.emplace_back([&, c] {
          const auto [lo, hi] = bounds_of(c);
          parts[c] = scan_range(d, lo, hi, options.cross_check);
        });
      }
    }
    Partial total_part = parts[0];
    for (std::size_t c = 1; c < parts.size(); ++c) merge(total_part, parts[c]);
    if (total_part.failure) throw Error(ErrorCode::InternalMismatch, *total_part.failure);

    SweepRow row;
    row.d = d;
    row.count = total;
    row.sigma = total_part.sigma;
    row.rho_sum = total_part.sum;
    row.argmax = Gf2Poly::from_word(total_part.argmax);
    row.cross_checked = total_part.checked;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string rational_decimal(std::uint64_t num, std::uint64_t den, int places) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "rational_decimal: zero denominator");
  Wide scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const Wide scaled = static_cast<Wide>(num) * scale;
  Wide q = scaled / den;
  const Wide r = scaled % den;
  const Wide twice = 2 * r;
  if (twice > den || (twice == den && (q & 1) != 0)) ++q;

  const Wide int_part = q / scale;
  Wide frac = q % scale;
  std::string out = std::to_string(static_cast<std::uint64_t>(int_part));
  if (places > 0) {
    std::string digits(static_cast<std::size_t>(places), '0');
    for (int i = places - 1; i >= 0; --i) {
      digits[static_cast<std::size_t>(i)] = static_cast<char>('0' + static_cast<int>(frac % 10));
      frac /= 10;
    }
    out += '.' + digits;
  }
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "d,count,sigma,rho,argmax_hex,bound_margin\n";
  for (const auto& r : rows) {
    out << r.d << ',' << r.count << ',' << r.sigma << ',' << r.rho_decimal() << ','
        << to_hex(r.argmax) << ',' << r.bound_margin_decimal() << '\n';
  }
  return out.str();
}

std::string sweep_json(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (i != 0) out << ',';
    out << "{\"d\":" << r.d << ",\"count\":" << r.count << ",\"sigma\":" << r.sigma
        << ",\"rho\":" << r.rho_decimal() << ",\"argmax_hex\":\"" << to_hex(r.argmax)
        << "\",\"bound_margin\":" << r.bound_margin_decimal() << '}';
  }
  out << "]\n";
  return out.str();
}

std::vector<GrowthRow> growth_report(const std::vector<SweepRow>& rows) {
  if (rows.size() < 3) throw Error(ErrorCode::InvalidArgument, "growth report needs at least 3 rows");
  std::vector<GrowthRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    GrowthRow g;
    g.d = r.d;
    if (r.d > 0) {
      const double d = static_cast<double>(r.d);
      const double sigma = static_cast<double>(r.sigma);
      g.sigma_over_d = sigma / d;
      g.sigma_over_d_1_5 = sigma / (d * std::sqrt(d));
      g.rho_over_d = static_cast<double>(r.rho_sum) / static_cast<double>(r.count) / d;
      if (r.d > 1) g.sigma_over_d_log_d = sigma / (d * std::log(d));
    }
    out.push_back(g);
  }
  return out;
}

std::string growth_csv(const std::vector<GrowthRow>& rows) {
  std::ostringstream out;
  out << "d,sigma_over_d,sigma_over_d_log_d,sigma_over_d_1_5,rho_over_d\n";
  for (const auto& g : rows) {
    out << g.d << ',' << optional_number(g.sigma_over_d, "") << ','
        << optional_number(g.sigma_over_d_log_d, "") << ','
        << optional_number(g.sigma_over_d_1_5, "") << ',' << optional_number(g.rho_over_d, "")
        << '\n';
  }
  return out.str();
}

std::string growth_json(const std::vector<GrowthRow>& rows) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& g = rows[i];
    if (i != 0) out << ',';
    out << "{\"d\":" << g.d << ",\"sigma_over_d\":" << optional_number(g.sigma_over_d, "null")
        << ",\"sigma_over_d_log_d\":" << optional_number(g.sigma_over_d_log_d, "null")
        << ",\"sigma_over_d_1_5\":" << optional_number(g.sigma_over_d_1_5, "null")
        << ",\"rho_over_d\":" << optional_number(g.rho_over_d, "null") << '}';
  }
  out << "]\n";
  return out.str();
}

}  // namespace polycollatz

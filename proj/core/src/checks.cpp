#include "polycollatz/checks.hpp"

#include <functional>
#include <random>

#include "polycollatz/bounds.hpp"
#include "polycollatz/closed_form.hpp"
#include "polycollatz/dynamics.hpp"
#include "polycollatz/error.hpp"
#include "polycollatz/fp_dynamics.hpp"
#include "polycollatz/gf2_poly.hpp"
#include "polycollatz/sweep.hpp"

namespace polycollatz {
namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  // Records `weight` cases; keeps the first failure message.
  void expect(bool ok, const std::function<std::string()>& describe, std::uint64_t weight = 1) {
    result_.cases += weight;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = describe();
    }
  }

  CheckResult finish() && { return std::move(result_); }

 private:
  CheckResult result_;
};

Gf2Poly random_poly(std::mt19937_64& rng, std::size_t max_degree) {
  std::uniform_int_distribution<std::size_t> deg_dist(0, max_degree);
  const std::size_t deg = deg_dist(rng);
  std::vector<Gf2Poly::Limb> limbs(deg / 64 + 1);
  for (auto& l : limbs) l = rng();
  const unsigned top = static_cast<unsigned>(deg % 64);
  if (top < 63) limbs.back() &= (Gf2Poly::Limb{2} << top) - 1;
  limbs.back() |= Gf2Poly::Limb{1} << top;
  return Gf2Poly::from_limbs(std::move(limbs));
}

CheckResult direct_vs_reduced(std::size_t max_deg) {
  Suite s("direct-vs-reduced (all nonzero f, deg <= " + std::to_string(max_deg) + ")");
  for (std::uint64_t w = 1; w < (std::uint64_t{2} << max_deg); ++w) {
    const Gf2Poly f = Gf2Poly::from_word(w);
    const auto direct = stopping_time_direct(f, MapKind::T, std::nullopt, Kernel::Generic).t_min;
    const auto reduced = stopping_time_reduced(f, Kernel::Generic).t_min;
    const auto fast = stopping_time_reduced(f).t_min;
    s.expect(direct == reduced && reduced == fast, [&] {
      return to_hex(f) + ": direct " + std::to_string(direct) + ", reduced " +
             std::to_string(reduced) + ", word " + std::to_string(fast);
    });
  }
  return std::move(s).finish();
}

CheckResult main_bounds(std::size_t max_deg) {
  Suite s("stopping-time bounds (all nonzero f, deg <= " + std::to_string(max_deg) + ")");
  for (std::uint64_t w = 1; w < (std::uint64_t{2} << max_deg); ++w) {
    const Gf2Poly f = Gf2Poly::from_word(w);
    const std::uint64_t d = f.degree().value();
    const std::uint64_t t = stopping_time_reduced(f).t_min;
    s.expect(within_main_bound(t, d) && t <= quadratic_bound(d), [&] {
      return to_hex(f) + ": t_min " + std::to_string(t) + " exceeds a bound at degree " +
             std::to_string(d);
    });
    if (f.is_odd()) {
      const std::uint64_t k = stopping_time_direct(reverse(f), MapKind::S3).t_min;
      s.expect(within_s3_bound(k, d), [&] {
        return to_hex(f) + ": S3 time " + std::to_string(k) + " exceeds sqrt(2) d^1.5";
      });
    }
  }
  return std::move(s).finish();
}

CheckResult s3_pow_formula(std::uint64_t max_n) {
  Suite s("S3 time of (x+1)^n (n <= " + std::to_string(max_n) + ")");
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    const auto direct = stopping_time_direct(pow_x_plus_1(n), MapKind::S3).t_min;
    const auto formula = s3_time_of_pow(n);
    s.expect(direct == formula, [&] {
      return "n=" + std::to_string(n) + ": direct " + std::to_string(direct) + ", formula " +
             std::to_string(formula);
    });
  }
  return std::move(s).finish();
}

CheckResult family_formula(std::uint64_t max_n) {
  Suite s("family stopping times (a,b <= 4, n <= " + std::to_string(max_n) + ")");
  for (std::uint64_t a = 0; a <= 4; ++a) {
    for (std::uint64_t b = 0; b <= 4; ++b) {
      if (a == 0 && b == 0) continue;
      for (std::uint64_t n = 1; n <= max_n; ++n) {
        const FamilyParams p{a, b, n};
        const auto formula = family_stopping_time(p);
        const auto direct = stopping_time_direct(family_poly(p), MapKind::T).t_min;
        s.expect(formula == direct, [&] {
          return "(a,b,n)=(" + std::to_string(a) + "," + std::to_string(b) + "," +
                 std::to_string(n) + "): formula " + std::to_string(formula) + ", direct " +
                 std::to_string(direct);
        });
        if (n * (a + b) >= 2) {
          s.expect(fab_reduce_check(p), [&] {
            return "reduction mismatch at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                   std::to_string(n) + ")";
          });
        }
      }
    }
  }
  return std::move(s).finish();
}

CheckResult ap_run_shapes(int d_max, int oracle_d_max) {
  Suite s("arithmetic runs (d in [3, " + std::to_string(d_max) + "])");
  const std::pair<std::uint64_t, std::uint64_t> pairs[] = {{1, 0}, {0, 1}, {1, 1}, {2, 1}};
  for (const auto& pair : pairs) {
    const std::uint64_t a = pair.first;
    const std::uint64_t b = pair.second;
    for (const auto& run : ap_runs(a, b, 3, d_max)) {
      const auto label = [&, d = run.d] {
        return "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ") d=" + std::to_string(d);
      };
      s.expect(run.length() == ap_run_length(a, b, run.d) && run.values.size() == run.length(),
               [&] { return label() + ": wrong length"; });
      for (std::size_t i = 1; i < run.values.size(); ++i) {
        s.expect(static_cast<std::int64_t>(run.values[i] - run.values[i - 1]) ==
                     static_cast<std::int64_t>(a) - static_cast<std::int64_t>(b),
                 [&] { return label() + ": wrong difference"; });
      }
      if (run.d <= oracle_d_max) {
        for (std::uint64_t n = run.n_start; n <= run.n_end; ++n) {
          const auto direct = stopping_time_direct(family_poly({a, b, n}), MapKind::T).t_min;
          s.expect(direct == run.values[n - run.n_start],
                   [&] { return label() + " n=" + std::to_string(n) + ": oracle disagrees"; });
        }
      }
    }
  }
  return std::move(s).finish();
}

CheckResult hat_algebra(std::mt19937_64& rng, std::size_t cases) {
  Suite s("reversal algebra (" + std::to_string(cases) + " random cases, deg <= 256)");
  for (std::size_t i = 0; i < cases; ++i) {
    const Gf2Poly f = random_poly(rng, 256);
    const Gf2Poly g = random_poly(rng, 256);
    const std::size_t k = rng() % 200;
    s.expect(reverse(f * g) == reverse(f) * reverse(g),
             [&] { return "multiplicativity fails for " + to_hex(f) + ", " + to_hex(g); });
    s.expect(reverse(shift_left(f, k)) == reverse(f),
             [&] { return "shift invariance fails for " + to_hex(f); });
    s.expect(reverse(reverse(f)) == strip_x(f).odd_part,
             [&] { return "double reversal fails for " + to_hex(f); });
  }
  return std::move(s).finish();
}

CheckResult iteration_formulas(std::mt19937_64& rng, std::size_t cases) {
  Suite s("S3 truncation formulas (" + std::to_string(cases) + " random cases, n <= 64)");
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t n = 1 + rng() % 64;
    // g with deg g < n (possibly zero)
    Gf2Poly g = truncate(random_poly(rng, n - 1), n - 1);
    if (rng() % 8 == 0) g = Gf2Poly::zero();
    Gf2Poly f = g;
    f.toggle(n);
    const std::size_t limit = g.is_zero() ? n : n - g.degree().value();
    Gf2Poly iter = f;
    for (std::size_t i = 0; i <= limit; ++i) {
      s.expect(iter == truncate(pow_x_plus_1(i) * f, n),
               [&] { return "iteration formula fails for " + to_hex(f) + " at i=" + std::to_string(i); });
      iter = step(iter, MapKind::S3);
    }
    if (f.is_odd()) {
      const std::size_t t = stopping_time_direct(f, MapKind::S3).t_min;
      Gf2Poly h = f;
      for (std::size_t k = 0; k <= t; ++k) {
        s.expect(h == truncate(pow_x_plus_1(k) * f, h.degree().value()),
                 [&] { return "restriction formula fails for " + to_hex(f) + " at k=" + std::to_string(k); });
        h = step(h, MapKind::S3);
      }
    }
  }
  return std::move(s).finish();
}

CheckResult t3_conjugacy(std::size_t max_deg) {
  Suite s("T3/S3 conjugacy (odd f, deg <= " + std::to_string(max_deg) + ")");
  for (std::uint64_t w = 1; w < (std::uint64_t{2} << max_deg); w += 2) {
    const Gf2Poly f = Gf2Poly::from_word(w);
    s.expect(t3_equivalence_check(f), [&] { return "conjugacy fails for " + to_hex(f); });
  }
  return std::move(s).finish();
}

CheckResult fp_orbits(std::size_t max_deg) {
  Suite s("F_p pre-periods (p in {2,3,5}, deg <= " + std::to_string(max_deg) + ")");
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (const auto& row : fp_bound_sweep(p, max_deg)) {
      s.expect(row.violations == 0, [&] {
        return "p=" + std::to_string(p) + " d=" + std::to_string(row.d) + ": max pre-period " +
               std::to_string(row.max_pre_period) + " above bound " + std::to_string(row.bound);
      }, row.count);
    }
  }
  for (std::uint64_t w = 1; w < (std::uint64_t{2} << max_deg); ++w) {
    const Gf2Poly f = Gf2Poly::from_word(w);
    FpPoly g = FpPoly::from_gf2(f);
    Gf2Poly h = f;
    bool same = true;
    const std::size_t t = stopping_time_reduced(f).t_min;
    for (std::size_t i = 0; i <= t + 2 && same; ++i) {
      same = g.to_gf2() == h;
      g = fp_step(g);
      h = step(h, MapKind::T);
    }
    s.expect(same, [&] { return "F_2 orbit differs from T orbit for " + to_hex(f); });
  }
  return std::move(s).finish();
}

CheckResult sweep_determinism(std::size_t max_deg, std::size_t threads) {
  Suite s("sweep determinism (d <= " + std::to_string(max_deg) + ", 1 vs " +
          std::to_string(std::max<std::size_t>(threads, 2)) + " threads)");
  SweepOptions serial;
  serial.cross_check = true;
  SweepOptions parallel;
  parallel.threads = std::max<std::size_t>(threads, 2);
  const auto a = sweep(0, max_deg, serial);
  const auto b = sweep(0, max_deg, parallel);
  s.expect(sweep_csv(a) == sweep_csv(b), [] { return std::string("outputs differ"); });
  for (const auto& row : a) {
    s.expect(row.within_bound(), [&] { return "bound margin negative at d=" + std::to_string(row.d); });
  }
  return std::move(s).finish();
}

template <class Fn>
CheckResult guarded(const std::string& name, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    CheckResult r;
    r.name = name;
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
    return r;
  }
}

}  // namespace

std::vector<CheckResult> run_checks(const CheckOptions& options) {
  const bool full = options.full;
  std::mt19937_64 rng(options.seed);
  std::vector<CheckResult> out;
  out.push_back(guarded("direct-vs-reduced", [&] { return direct_vs_reduced(full ? 14 : 10); }));
  out.push_back(guarded("bounds", [&] { return main_bounds(full ? 16 : 10); }));
  out.push_back(guarded("s3-pow", [&] { return s3_pow_formula(full ? 4096 : 1024); }));
  out.push_back(guarded("family", [&] { return family_formula(full ? 128 : 32); }));
  out.push_back(guarded("ap-runs", [&] { return ap_run_shapes(full ? 12 : 10, 7); }));
  out.push_back(guarded("hat", [&] { return hat_algebra(rng, full ? 10000 : 1000); }));
  out.push_back(guarded("s3-formulas", [&] { return iteration_formulas(rng, full ? 1000 : 200); }));
  out.push_back(guarded("t3-conjugacy", [&] { return t3_conjugacy(full ? 14 : 10); }));
  out.push_back(guarded("fp", [&] { return fp_orbits(full ? 5 : 3); }));
  out.push_back(guarded("sweep", [&] { return sweep_determinism(full ? 18 : 10, options.threads); }));
  return out;
}

}  // namespace polycollatz

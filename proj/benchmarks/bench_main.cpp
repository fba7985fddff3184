#include <benchmark/benchmark.h>

#include <random>

#include "polycollatz/dynamics.hpp"
#include "polycollatz/gf2_poly.hpp"
#include "polycollatz/sweep.hpp"

using namespace polycollatz;

namespace {

Gf2Poly random_of_degree(std::mt19937_64& rng, std::size_t d) {
  std::vector<std::size_t> exps{d, 0};
  for (std::size_t i = 1; i < d; ++i) {
    if (rng() & 1u) exps.push_back(i);
  }
  return Gf2Poly::from_exponents(exps);
}

void BM_Mul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto a = random_of_degree(rng, d);
  const auto b = random_of_degree(rng, d);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_Mul)->RangeMultiplier(4)->Range(64, 4096);

void BM_StoppingTime(benchmark::State& state, Method method, Kernel kernel) {
  std::mt19937_64 rng(2);
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto f = random_of_degree(rng, d);
  for (auto _ : state) {
    auto r = method == Method::Direct ? stopping_time_direct(f, MapKind::T, std::nullopt, kernel)
                                      : stopping_time_reduced(f, kernel);
    benchmark::DoNotOptimize(r.t_min);
  }
}
BENCHMARK_CAPTURE(BM_StoppingTime, direct_auto, Method::Direct, Kernel::Auto)->Arg(16)->Arg(40);
BENCHMARK_CAPTURE(BM_StoppingTime, reduced_auto, Method::Reduced, Kernel::Auto)->Arg(16)->Arg(40);
BENCHMARK_CAPTURE(BM_StoppingTime, direct_generic, Method::Direct, Kernel::Generic)
    ->Arg(16)->Arg(40)->Arg(256);
BENCHMARK_CAPTURE(BM_StoppingTime, reduced_generic, Method::Reduced, Kernel::Generic)
    ->Arg(16)->Arg(40)->Arg(256);

void BM_Sweep(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  SweepOptions opts;
  opts.threads = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(d, d, opts));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << d));
}
BENCHMARK(BM_Sweep)->Args({16, 1})->Args({16, 4})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

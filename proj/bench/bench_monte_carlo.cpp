// Serial reference versus the OpenMP Monte Carlo kernel, plus the closed
// form it approximates.

#include <benchmark/benchmark.h>

#include "stochrat/power.hpp"

namespace {

using stochrat::RandomSeed;

void BM_MonteCarloSerial(benchmark::State& state) {
  const auto nu = stochrat::uniform_population();
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto r = stochrat::power_monte_carlo_serial(nu, n, 20000, RandomSeed{7});
    benchmark::DoNotOptimize(r.acceptance_probability);
  }
}

void BM_MonteCarloParallel(benchmark::State& state) {
  const auto nu = stochrat::uniform_population();
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto r = stochrat::power_monte_carlo(nu, n, 20000, RandomSeed{7});
    benchmark::DoNotOptimize(r.acceptance_probability);
  }
}

void BM_ClosedForm(benchmark::State& state) {
  const auto nu = stochrat::proportional_population();
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto r = stochrat::power_closed_form(nu, n);
    benchmark::DoNotOptimize(r.acceptance_probability);
  }
}

BENCHMARK(BM_MonteCarloSerial)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloParallel)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosedForm)->Arg(10)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

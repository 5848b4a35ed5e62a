#include <benchmark/benchmark.h>

#include "cstree/asymptotics.hpp"
#include "cstree/enumeration.hpp"
#include "cstree/exact_stats.hpp"
#include "cstree/series.hpp"

namespace {

using namespace cstree;

void BM_Enumerate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for (const PlaneTree& t : enumerate_trees(n)) count += t.size();
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_Enumerate)->DenseRange(10, 14, 2)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_census(n, n));
}
BENCHMARK(BM_Census)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_SeriesG(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(series_G(1, order));
}
BENCHMARK(BM_SeriesG)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_PhiPower(benchmark::State& state) {
  const std::size_t order = 16;
  const auto s = series_S(order);
  for (auto _ : state) benchmark::DoNotOptimize(phi_power(s, static_cast<std::size_t>(state.range(0)), order));
}
BENCHMARK(BM_PhiPower)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ExpectedAge(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expected_age(n));
}
BENCHMARK(BM_ExpectedAge)->Arg(100)->Arg(800)->Unit(benchmark::kMillisecond);

void BM_AgeVariance(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(age_variance(n));
}
BENCHMARK(BM_AgeVariance)->Arg(800)->Unit(benchmark::kMillisecond);

void BM_Constants(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int i = 0; i < 4; ++i) benchmark::DoNotOptimize(constant_c({i, digits}));
  }
}
BENCHMARK(BM_Constants)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_Sample(benchmark::State& state) {
  SamplerConfig cfg{static_cast<std::size_t>(state.range(0)), 0, 1000,
                    state.range(1) == 0 ? SamplingMethod::rejection : SamplingMethod::bijection};
  for (auto _ : state) {
    ++cfg.seed;
    benchmark::DoNotOptimize(sample_tree(cfg));
  }
}
BENCHMARK(BM_Sample)->Args({1000, 0})->Args({1000, 1})->Args({10000, 1})->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

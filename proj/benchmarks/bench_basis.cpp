#include <benchmark/benchmark.h>

#include "wschub/weighted.hpp"

using namespace wschub;

namespace {

WeightSystem ramp(int n) {
  std::vector<long> w;
  for (int i = 0; i < n; ++i) w.push_back(i);
  return WeightSystem(w, 1);
}

void BM_OrdinaryBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_ordinary_basis(n, d));
}

void BM_WeightedBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  const auto route = state.range(2) ? Route::kPieri : Route::kSubstitution;
  const WeightSystem ws = ramp(n);
  for (auto _ : state) benchmark::DoNotOptimize(build_weighted_basis(n, d, ws, route));
}

}  // namespace

BENCHMARK(BM_OrdinaryBasis)->Args({4, 2})->Args({5, 2})->Args({6, 3})->Args({7, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeightedBasis)
    ->ArgsProduct({{5}, {2}, {0, 1}})
    ->ArgsProduct({{6}, {3}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

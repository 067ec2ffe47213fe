#include <benchmark/benchmark.h>

#include "wschub/weighted.hpp"

using namespace wschub;

namespace {

WeightSystem ramp(int n) {
  std::vector<long> w;
  for (int i = 0; i < n; ++i) w.push_back(i);
  return WeightSystem(w, 1);
}

// Full constant tables by each route.
void BM_ConstantsGkm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  const auto basis = build_weighted_basis(n, d, ramp(n), Route::kPieri);
  for (auto _ : state) benchmark::DoNotOptimize(constant_table_gkm(basis));
}

void BM_ConstantsFormula(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  const auto ordinary = build_ordinary_basis(n, d);
  const WeightSystem ws = ramp(n);
  for (auto _ : state) {
    ConstantsFormula formula(ordinary, ws);
    benchmark::DoNotOptimize(constant_table_formula(formula));
  }
}

void BM_SinglePairGkm(benchmark::State& state) {
  const auto basis = build_weighted_basis(6, 3, ramp(6), Route::kPieri);
  const auto& g = *basis.graph;
  const IndexSet lam = g.vertex(g.linear_extension()[g.size() / 2]);
  for (auto _ : state) benchmark::DoNotOptimize(weighted_constants_gkm(lam, lam, basis));
}

}  // namespace

BENCHMARK(BM_ConstantsGkm)->Args({4, 2})->Args({5, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConstantsFormula)->Args({4, 2})->Args({5, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SinglePairGkm)->Unit(benchmark::kMillisecond);

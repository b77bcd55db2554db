#include <benchmark/benchmark.h>

#include "tecol/line_engine.hpp"

namespace {

void BM_ColorCyclicH(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const auto model = tecol::CycleModel::make(N, {1, 2, 3});
  for (auto _ : state) benchmark::DoNotOptimize(tecol::color_cyclic_H(model));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(model.edge_count()));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ColorCyclicH)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity(benchmark::oN);

void BM_Markers(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tecol::greedy_discrete_markers(N, 14));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Markers)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity(benchmark::oN);

}  // namespace

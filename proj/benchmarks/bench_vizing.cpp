#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "tecol/vizing.hpp"

namespace {

tecol::Multigraph random_regularish(std::size_t n, std::size_t degree, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<tecol::Endpoints> edges;
  std::vector<std::size_t> deg(n, 0);
  std::uniform_int_distribution<tecol::VertexId> pick(0, static_cast<tecol::VertexId>(n - 1));
  std::vector<std::vector<tecol::VertexId>> adj(n);
  for (std::size_t tries = 0; tries < n * degree * 4; ++tries) {
    const auto u = pick(rng), v = pick(rng);
    if (u == v || deg[u] >= degree || deg[v] >= degree) continue;
    if (std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end()) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
    ++deg[u];
    ++deg[v];
    edges.push_back({u, v});
  }
  return tecol::Multigraph(n, std::move(edges));
}

void BM_Vizing(benchmark::State& state) {
  const auto g = random_regularish(static_cast<std::size_t>(state.range(0)), 8, 7);
  for (auto _ : state) benchmark::DoNotOptimize(tecol::vizing_color(g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.edge_count()));
}
BENCHMARK(BM_Vizing)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

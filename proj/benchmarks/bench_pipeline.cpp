#include <benchmark/benchmark.h>

#include "tecol/pipeline.hpp"

namespace {

// S3 with two transpositions, (e, +-1) and a 3-cycle at +-2: d = 6.
tecol::MarkedGroupSpec s3_spec() {
  const auto s3 = tecol::symmetric3_group();
  std::vector<tecol::GroupElement> involutions;
  tecol::GroupElement rot = 0;
  for (tecol::GroupElement a = 1; a < s3.order(); ++a) {
    if (s3.mul(a, a) == 0)
      involutions.push_back(a);
    else
      rot = a;
  }
  return tecol::MarkedGroupSpec(s3, tecol::QuotientKind::Z, tecol::Automorphism::identity(6), std::nullopt,
                                {{involutions[0], {0, 0}},
                                 {involutions[1], {0, 0}},
                                 {0, {1, 0}},
                                 {0, {-1, 0}},
                                 {rot, {2, 0}},
                                 {s3.inv(rot), {-2, 0}}});
}

void BM_RunS3(benchmark::State& state) {
  const auto spec = s3_spec();
  const auto model = tecol::finite_model(spec, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tecol::run(model));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(model.graph().edge_count()));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RunS3)->RangeMultiplier(10)->Range(1000, 100000)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);

void BM_BuildModel(benchmark::State& state) {
  const auto spec = s3_spec();
  for (auto _ : state) benchmark::DoNotOptimize(tecol::finite_model(spec, static_cast<std::size_t>(state.range(0))));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildModel)->RangeMultiplier(10)->Range(1000, 100000)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);

}  // namespace

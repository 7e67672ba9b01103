#include <benchmark/benchmark.h>

#include "actioncode/closed_forms.hpp"

using namespace actioncode;

static void BM_ConstraintTriple(benchmark::State& state) {
  info::Joint3 j = region::example2_model(0.3, 0.4, 0.5, 1).joint();
  for (auto _ : state) {
    auto r = region::constraints_case_b(j);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ConstraintTriple);

static void BM_TraceFrontier(benchmark::State& state) {
  info::ActionModel m = region::example2_model(0, 0, 0.5, 0.3);
  const int res = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto f = region::trace_frontier(m, region::Scenario::EncoderActions, res);
    benchmark::DoNotOptimize(f);
  }
  state.SetComplexityN(res);
}
BENCHMARK(BM_TraceFrontier)->RangeMultiplier(2)->Range(32, 512)->Complexity();

BENCHMARK_MAIN();

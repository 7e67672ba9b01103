#include <benchmark/benchmark.h>

#include "actioncode/collision.hpp"
#include "actioncode/max_flow.hpp"
#include "actioncode/rng.hpp"

using namespace actioncode;

namespace {

net::Network layered_dag(int width) {
  std::vector<net::Link> links;
  int s1 = 0, s2 = 1;
  int first_mid = 2;
  int t = 2 + 2 * width;
  for (int i = 0; i < width; ++i) {
    links.push_back({s1, first_mid + i, 1});
    links.push_back({s2, first_mid + i, 1});
    for (int k = 0; k < width; ++k) {
      links.push_back({first_mid + i, first_mid + width + k, 1});
    }
    links.push_back({first_mid + width + i, t, 1});
  }
  return net::Network(t + 1, links, s1, s2, {t});
}

}  // namespace

static void BM_MinCut(benchmark::State& state) {
  net::Network n = layered_dag(static_cast<int>(state.range(0)));
  const int both[2] = {0, 1};
  for (auto _ : state) {
    double c = net::min_cut(n, std::span<const int>(both, 2), n.terminals()[0]);
    benchmark::DoNotOptimize(c);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MinCut)->RangeMultiplier(2)->Range(2, 16)->Complexity();

static void BM_CollisionTrials(benchmark::State& state) {
  net::Network n = layered_dag(3);
  rlnc::InputLayout layout = rlnc::InputLayout::two_source(2, 0, 2, 1);
  gf::FieldSpec f = gf::FieldSpec::gf256();
  std::vector<gf::Elem> u = {0, 0, 0, 0}, v = {1, 2, 0, 0};
  for (auto _ : state) {
    auto est = rlnc::collision_probability_estimate(n, layout, u, v, n.terminals()[0], f,
                                                    state.range(0), 42);
    benchmark::DoNotOptimize(est);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CollisionTrials)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();

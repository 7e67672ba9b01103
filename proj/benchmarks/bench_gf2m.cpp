#include <benchmark/benchmark.h>

#include "actioncode/field_matrix.hpp"
#include "actioncode/rng.hpp"

using namespace actioncode;

static void BM_MulTable(benchmark::State& state) {
  gf::FieldSpec f = gf::FieldSpec::gf256();
  RngStream rng(1);
  std::vector<gf::Elem> xs(1024), ys(1024);
  for (auto& x : xs) x = static_cast<gf::Elem>(rng.uniform_below(256));
  for (auto& y : ys) y = static_cast<gf::Elem>(rng.uniform_below(256));
  std::size_t i = 0;
  for (auto _ : state) {
    gf::Elem r = f.mul(xs[i & 1023], ys[i & 1023]);
    benchmark::DoNotOptimize(r);
    ++i;
  }
}
BENCHMARK(BM_MulTable);

static void BM_MulCarryless(benchmark::State& state) {
  gf::FieldSpec f = gf::FieldSpec::gf256();
  RngStream rng(1);
  std::vector<gf::Elem> xs(1024), ys(1024);
  for (auto& x : xs) x = static_cast<gf::Elem>(rng.uniform_below(256));
  for (auto& y : ys) y = static_cast<gf::Elem>(rng.uniform_below(256));
  std::size_t i = 0;
  for (auto _ : state) {
    gf::Elem r = f.mul_carryless(xs[i & 1023], ys[i & 1023]);
    benchmark::DoNotOptimize(r);
    ++i;
  }
}
BENCHMARK(BM_MulCarryless);

static void BM_UnitriangularInverse(benchmark::State& state) {
  gf::FieldSpec f = gf::FieldSpec::gf256();
  RngStream rng(7);
  const int n = static_cast<int>(state.range(0));
  gf::FieldMatrix m = gf::FieldMatrix::identity(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) m.at(i, j) = static_cast<gf::Elem>(rng.uniform_below(256));
  }
  for (auto _ : state) {
    auto g = gf::invert_unitriangular(f, m);
    benchmark::DoNotOptimize(g);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_UnitriangularInverse)->RangeMultiplier(2)->Range(4, 64)->Complexity();

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "starchrome/families.hpp"
#include "starchrome/outerplanar.hpp"
#include "starchrome/star_color.hpp"

using namespace starchrome;

static void BM_ExactHPrime(benchmark::State& state) {
  Graph g = build_family(FamilyId::HPrime, {0, static_cast<int>(state.range(0)), 0}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(exact_chi_star(g).chi);
}
BENCHMARK(BM_ExactHPrime)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_ExactFan(benchmark::State& state) {
  Graph g = build_family(FamilyId::Fan, {static_cast<int>(state.range(0)), 0, 0}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(exact_chi_star(g).chi);
}
BENCHMARK(BM_ExactFan)->DenseRange(6, 12, 2)->Unit(benchmark::kMicrosecond);

static void BM_CanonicalKey(benchmark::State& state) {
  auto mops = polygon_triangulations(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(mops[i++ % mops.size()]));
}
BENCHMARK(BM_CanonicalKey)->Arg(8)->Arg(10)->Arg(12);

static void BM_EnumerateMops(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_mops(static_cast<int>(state.range(0))).members.size());
}
BENCHMARK(BM_EnumerateMops)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);

static void BM_StarViolationsStrip(benchmark::State& state) {
  EdgeColoring c = delta5_strip_coloring(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(star_violations(c).size());
}
BENCHMARK(BM_StarViolationsStrip)->Arg(10)->Arg(100);

BENCHMARK_MAIN();

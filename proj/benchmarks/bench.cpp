#include <benchmark/benchmark.h>

#include "rds/construct.hpp"
#include "rds/genfunc.hpp"
#include "rds/graph.hpp"
#include "rds/recurrence.hpp"

static void BM_RowWindow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rds::rdp_row(n));
}
BENCHMARK(BM_RowWindow)->Arg(200)->Arg(1000)->Arg(2000);

static void BM_SeriesExpand(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rds::expand_series(n));
}
BENCHMARK(BM_SeriesExpand)->Arg(100)->Arg(300);

static void BM_BruteForceRow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const rds::GraphSpec g = rds::make_cycle(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(rds::count_rds_by_cardinality(g));
}
BENCHMARK(BM_BruteForceRow)->Arg(12)->Arg(16);

static void BM_ConstructRow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    rds::FamilyBuilder builder;
    for (int i = 0; i <= n; ++i)
      benchmark::DoNotOptimize(builder.family(n, i));
  }
}
BENCHMARK(BM_ConstructRow)->Arg(16);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "jensen/analysis.hpp"

using namespace jensen;

// Fresh stores so the caches do not hide the fill cost.
static void BM_PartitionFill(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    SequenceStore store;
    benchmark::DoNotOptimize(store.partition(n));
  }
}
BENCHMARK(BM_PartitionFill)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_OverpartitionFill(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    SequenceStore store;
    benchmark::DoNotOptimize(store.overpartition(n));
  }
}
BENCHMARK(BM_OverpartitionFill)->Arg(500)->Arg(4000)->Unit(benchmark::kMillisecond);

static void BM_SturmCount(benchmark::State& state) {
  const auto p = jensen_poly(SequenceId::partition(), state.range(0), 1000);
  for (auto _ : state) benchmark::DoNotOptimize(count_real_roots(p));
}
BENCHMARK(BM_SturmCount)->DenseRange(3, 9, 2)->Unit(benchmark::kMicrosecond);

static void BM_SturmIsolate(benchmark::State& state) {
  const auto p = jensen_poly(SequenceId::partition(), state.range(0), 1000);
  for (auto _ : state) benchmark::DoNotOptimize(sturm_real_roots(p));
}
BENCHMARK(BM_SturmIsolate)->DenseRange(3, 9, 2)->Unit(benchmark::kMillisecond);

static void BM_Renormalize(benchmark::State& state) {
  const PrecisionContext ctx{.bits = 192};
  const auto id = SequenceId::kregular(2);
  const long n = state.range(1);
  const HJData data = data_for(id, n, DataVariant::Simplified, ctx);
  renormalize_jensen(id, state.range(0), n, data, ctx);  // fill the term cache first
  for (auto _ : state) benchmark::DoNotOptimize(renormalize_jensen(id, state.range(0), n, data, ctx));
}
BENCHMARK(BM_Renormalize)->Args({7, 1000})->Args({7, 100000})->Args({12, 100000})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

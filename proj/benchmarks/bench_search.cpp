#include <benchmark/benchmark.h>

#include "jeqp/canon.hpp"
#include "jeqp/constructions.hpp"
#include "jeqp/search.hpp"

using namespace jeqp;

static void BM_EnumerateJ63(benchmark::State& state) {
  SearchSpec spec;
  spec.params = {6, 3};
  spec.matrix = {2, 7, 3, 6};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_partitions(spec));
}
BENCHMARK(BM_EnumerateJ63);

static void BM_EnumerateJ84(benchmark::State& state) {
  SearchSpec spec;
  spec.params = {8, 4};
  spec.matrix = {4, 12, 2, 14};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_partitions(spec));
}
BENCHMARK(BM_EnumerateJ84);

static void BM_CanonicalForm(benchmark::State& state) {
  const TwoPartition p = construction2(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(p));
}
BENCHMARK(BM_CanonicalForm)->Arg(4)->Arg(5);

BENCHMARK_MAIN();

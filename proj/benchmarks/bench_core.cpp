#include <benchmark/benchmark.h>

#include "jeqp/constructions.hpp"
#include "jeqp/eigenfn.hpp"
#include "jeqp/johnson.hpp"

using namespace jeqp;

static void BM_RankUnrank(benchmark::State& state) {
  const JohnsonGraph g(static_cast<int>(state.range(0)),
                       static_cast<int>(state.range(0)) / 2);
  const std::uint64_t N = g.num_vertices();
  std::uint64_t r = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.rank(g.unrank(r)));
    r = (r + 1) % N;
  }
}
BENCHMARK(BM_RankUnrank)->Arg(8)->Arg(12)->Arg(16);

static void BM_Neighbors(benchmark::State& state) {
  const JohnsonGraph g(static_cast<int>(state.range(0)),
                       static_cast<int>(state.range(0)) / 2);
  const Vertex v = g.first();
  for (auto _ : state) benchmark::DoNotOptimize(g.neighbors(v));
}
BENCHMARK(BM_Neighbors)->Arg(8)->Arg(16);

static void BM_VerifyEquitable(benchmark::State& state) {
  const TwoPartition p = construction2(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_equitable(p));
}
BENCHMARK(BM_VerifyEquitable)->Arg(4)->Arg(6)->Arg(8);

static void BM_DifferenceCensus(benchmark::State& state) {
  const TwoPartition p = construction4(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(difference_census(p));
}
BENCHMARK(BM_DifferenceCensus)->Arg(4)->Arg(5);

BENCHMARK_MAIN();

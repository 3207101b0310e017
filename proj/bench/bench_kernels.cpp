// Serial reference kernels against their OpenMP counterparts.
//
//   ./build/bench/coauth_bench --benchmark_filter=Betweenness

#include <benchmark/benchmark.h>

#include <random>

#include "coauth/kernels.hpp"
#include "support/random_graphs.hpp"

namespace {

using namespace coauth;

// Sparse graph with mean degree ~4, similar to co-authorship data.
CoauthGraph bench_graph(std::size_t n) {
  std::mt19937_64 rng(20061101);
  return testing::connected_random(n, 3.0 / static_cast<double>(n), rng);
}

void BM_BetweennessSerial(benchmark::State& state) {
  const auto g = bench_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::betweenness_serial(g));
}

void BM_BetweennessParallel(benchmark::State& state) {
  const auto g = bench_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::betweenness_parallel(g, 0));
}

void BM_SourceSumsSerial(benchmark::State& state) {
  const auto g = bench_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::source_sums_serial(g));
}

void BM_SourceSumsParallel(benchmark::State& state) {
  const auto g = bench_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::source_sums_parallel(g, 0));
}

void BM_FrontRanksSerial(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto rows = static_cast<std::size_t>(state.range(0));
  const auto v = testing::random_scores(rows, 4, 1000, rng);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::front_ranks_serial(v, rows, 4));
}

void BM_FrontRanksParallel(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto rows = static_cast<std::size_t>(state.range(0));
  const auto v = testing::random_scores(rows, 4, 1000, rng);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::front_ranks_parallel(v, rows, 4, 0));
}

}  // namespace

BENCHMARK(BM_BetweennessSerial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BetweennessParallel)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SourceSumsSerial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SourceSumsParallel)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FrontRanksSerial)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FrontRanksParallel)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "antichain/partition.hpp"

using namespace antichain;

static void BM_GreedyPartition(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  const auto set = random_weak_antichain(4, 16, size, 1);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_partition(set));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(size));
}
BENCHMARK(BM_GreedyPartition)->Arg(64)->Arg(512)->Arg(2048);

static void BM_RandomWeakAntichain(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(random_weak_antichain(4, 8, 64, ++seed));
}
BENCHMARK(BM_RandomWeakAntichain);

static void BM_GapScan(benchmark::State& state) {
  GapScanOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_gap_scan(2, 4, static_cast<std::size_t>(state.range(0)), opts));
}
BENCHMARK(BM_GapScan)->Arg(3)->Arg(5);

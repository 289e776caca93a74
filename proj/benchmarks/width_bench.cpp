#include <benchmark/benchmark.h>

#include "antichain/extremal.hpp"

using namespace antichain;

static void BM_MaxAntichain(benchmark::State& state) {
  const GridPoset poset{3, static_cast<Coord>(state.range(0)), OrderMode::StrictProduct};
  for (auto _ : state) benchmark::DoNotOptimize(max_antichain(poset));
}
BENCHMARK(BM_MaxAntichain)->Arg(3)->Arg(5)->Arg(8);

static void BM_LayerSize(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(layer_size(12, 10, middle_level(12, 10)));
}
BENCHMARK(BM_LayerSize);

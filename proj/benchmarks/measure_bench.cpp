#include <benchmark/benchmark.h>

#include "antichain/continuous.hpp"
#include "antichain/grid.hpp"

using namespace antichain;

static void BM_SphereMeasure2D(benchmark::State& state) {
  const auto s = MonotoneGraphSurface::lp_sphere(2, static_cast<double>(state.range(0)));
  MeasureOptions opts;
  opts.abs_tol = 1e-6;
  for (auto _ : state) benchmark::DoNotOptimize(surface_measure(s, opts));
}
BENCHMARK(BM_SphereMeasure2D)->Arg(2)->Arg(64);

static void BM_SphereMeasure3D(benchmark::State& state) {
  const auto s = MonotoneGraphSurface::lp_sphere(3, 4.0);
  MeasureOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(surface_measure(s, opts));
}
BENCHMARK(BM_SphereMeasure3D)->Unit(benchmark::kMillisecond);

static void BM_GridCover(benchmark::State& state) {
  const auto s = MonotoneGraphSurface::lp_sphere(3, 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(grid_cover(s, static_cast<Coord>(state.range(0))));
}
BENCHMARK(BM_GridCover)->Arg(16)->Arg(64);

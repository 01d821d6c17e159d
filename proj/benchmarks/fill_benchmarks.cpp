#include <benchmark/benchmark.h>

#include <scaff/casegen.hpp>
#include <scaff/fill.hpp>
#include <scaff/flood_fill.hpp>

namespace {

constexpr int kCase = 8;  // multiple objects, border contact, holes

void BM_Efci(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const scaff::Raster img = scaff::generate_case(kCase, size).boundary_image;
  for (auto _ : state) {
    benchmark::DoNotOptimize(scaff::efci(img));
  }
  state.SetItemsProcessed(state.iterations() * size * size);
}

void BM_Scaff(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const scaff::Raster img = scaff::generate_case(kCase, size).boundary_image;
  for (auto _ : state) {
    benchmark::DoNotOptimize(scaff::scaff(img));
  }
  state.SetItemsProcessed(state.iterations() * size * size);
}

void BM_FloodFillOpenField(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const scaff::Raster blank(size, size, 0);
  for (auto _ : state) {
    state.PauseTiming();
    scaff::Raster work = blank;
    state.ResumeTiming();
    benchmark::DoNotOptimize(scaff::flood_fill(work, {0, 0}, 80));
  }
  state.SetItemsProcessed(state.iterations() * size * size);
}

void BM_FloodFillOracle(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const scaff::Raster blank(size, size, 0);
  for (auto _ : state) {
    state.PauseTiming();
    scaff::Raster work = blank;
    state.ResumeTiming();
    benchmark::DoNotOptimize(scaff::flood_fill_oracle(work, {0, 0}, 80));
  }
  state.SetItemsProcessed(state.iterations() * size * size);
}

}  // namespace

BENCHMARK(BM_Efci)->ArgName("size")->DenseRange(200, 2000, 600)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Scaff)->ArgName("size")->DenseRange(200, 2000, 600)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FloodFillOpenField)->ArgName("size")->RangeMultiplier(2)->Range(64, 1024);
BENCHMARK(BM_FloodFillOracle)->ArgName("size")->RangeMultiplier(2)->Range(64, 1024);

BENCHMARK_MAIN();

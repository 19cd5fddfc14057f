#include <benchmark/benchmark.h>

#include "ghc/kernels/census.hpp"

namespace {

using ghc::rootsys::RootSystem;
using ghc::rootsys::Series;

void BM_CensusSerial(benchmark::State &state) {
  auto rs = RootSystem::build(Series::A, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ghc::kernels::census_serial(rs));
}

void BM_CensusParallel(benchmark::State &state) {
  auto rs = RootSystem::build(Series::A, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ghc::kernels::census_parallel(rs));
}

void BM_KTypeSeriesSerial(benchmark::State &state) {
  auto pd = ghc::principal::principal_data(RootSystem::build(Series::F, 4));
  auto lam = ghc::principal::nonintegral_weight_with_h(pd, 12);
  for (auto _ : state) benchmark::DoNotOptimize(ghc::kernels::ktype_series_serial(pd, lam, state.range(0)));
}

void BM_KTypeSeriesParallel(benchmark::State &state) {
  auto pd = ghc::principal::principal_data(RootSystem::build(Series::F, 4));
  auto lam = ghc::principal::nonintegral_weight_with_h(pd, 12);
  for (auto _ : state) benchmark::DoNotOptimize(ghc::kernels::ktype_series_parallel(pd, lam, state.range(0)));
}

} // namespace

BENCHMARK(BM_CensusSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KTypeSeriesSerial)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KTypeSeriesParallel)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

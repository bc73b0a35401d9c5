// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "mag/enumeration.hpp"

namespace {

void BM_EnumerateSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mag::enumerate_mags_serial(n));
}
BENCHMARK(BM_EnumerateSerial)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_EnumerateParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mag::enumerate_mags(n));
}
BENCHMARK(BM_EnumerateParallel)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_PartitionSerial(benchmark::State& state) {
  const auto mags = mag::enumerate_mags(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mag::partition_into_classes_serial(mags));
}
BENCHMARK(BM_PartitionSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_PartitionParallel(benchmark::State& state) {
  const auto mags = mag::enumerate_mags(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mag::partition_into_classes(mags));
}
BENCHMARK(BM_PartitionParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

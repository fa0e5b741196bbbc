#include <benchmark/benchmark.h>

#include "pencilkit/generators.hpp"
#include "pencilkit/reduction.hpp"

namespace pk = pencilkit;

namespace {

void BM_ReduceDirect(benchmark::State& state) {
  pk::Rng rng(3);
  const auto p = pk::random_indefinite_pencil(static_cast<int>(state.range(0)), rng, true);
  for (auto _ : state) benchmark::DoNotOptimize(pk::reduce_direct(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ReduceDirect)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNCubed);

void BM_ReduceViaInverse(benchmark::State& state) {
  pk::Rng rng(3);
  const auto p = pk::random_indefinite_pencil(static_cast<int>(state.range(0)), rng, true);
  for (auto _ : state) benchmark::DoNotOptimize(pk::reduce_via_inverse(p));
}
BENCHMARK(BM_ReduceViaInverse)->RangeMultiplier(2)->Range(8, 256);

void BM_CorrespondenceReport(benchmark::State& state) {
  pk::Rng rng(5);
  const auto p = pk::random_indefinite_pencil(static_cast<int>(state.range(0)), rng, true);
  for (auto _ : state) benchmark::DoNotOptimize(pk::spectral_correspondence_report(p));
}
BENCHMARK(BM_CorrespondenceReport)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_ResidualIndicator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pk::residual_indicator(n));
}
BENCHMARK(BM_ResidualIndicator)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace

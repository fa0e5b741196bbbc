#include <benchmark/benchmark.h>

#include "pencilkit/discretize.hpp"
#include "pencilkit/generators.hpp"
#include "pencilkit/pencil.hpp"

namespace pk = pencilkit;

namespace {

pk::SymmetricPencil mixed_pencil(int n) {
  pk::Rng rng(pk::derive_seed(7, static_cast<std::uint64_t>(n)));
  return pk::random_indefinite_pencil(n, rng, true);
}

void BM_Eigenvalues(benchmark::State& state) {
  const auto p = mixed_pencil(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pk::pencil_eigenvalues(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Eigenvalues)->RangeMultiplier(2)->Range(8, 128)->Complexity();

// Same pencils through the two routes that do not need B to be invertible.
void BM_EigenvaluesQz(benchmark::State& state) {
  const auto p = mixed_pencil(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pk::pencil_eigenvalues_qz(p));
}
BENCHMARK(BM_EigenvaluesQz)->RangeMultiplier(2)->Range(8, 64);

void BM_EigenvaluesDet(benchmark::State& state) {
  const auto p = mixed_pencil(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pk::pencil_eigenvalues_det(p));
}
BENCHMARK(BM_EigenvaluesDet)->DenseRange(4, 16, 4);

void BM_SingularB(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  pk::Rng rng(11);
  const auto p = pk::invariant_kernel_pencil(n, n / 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(pk::pencil_eigenvalues(p));
}
BENCHMARK(BM_SingularB)->RangeMultiplier(2)->Range(8, 64);

void BM_GreenKernelSpectrum(benchmark::State& state) {
  const auto p = pk::green_kernel_pencil(pk::GridSpec{static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(pk::pencil_eigenvalues(p));
}
BENCHMARK(BM_GreenKernelSpectrum)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

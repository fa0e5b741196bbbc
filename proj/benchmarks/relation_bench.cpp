#include <benchmark/benchmark.h>

#include "pencilkit/generators.hpp"
#include "pencilkit/relation.hpp"
#include "pencilkit/variational.hpp"

namespace pk = pencilkit;

namespace {

void BM_OperatorPart(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  pk::Rng rng(13);
  const auto t = pk::random_multivalued_relation(n, n / 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(pk::operator_part(t));
}
BENCHMARK(BM_OperatorPart)->RangeMultiplier(2)->Range(8, 64);

void BM_Adjoint(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  pk::Rng rng(17);
  const auto t = pk::random_multivalued_relation(n, n / 4, rng, false);
  for (auto _ : state) benchmark::DoNotOptimize(pk::relation_adjoint(t));
}
BENCHMARK(BM_Adjoint)->RangeMultiplier(2)->Range(8, 64);

void BM_StildeQuotient(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  pk::Rng rng(19);
  const auto p = pk::invariant_kernel_pencil(n, n / 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(pk::stilde_quotient(p));
}
BENCHMARK(BM_StildeQuotient)->RangeMultiplier(2)->Range(8, 64);

void BM_RayleighRitz(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  pk::Rng rng(23);
  const auto p = pk::random_indefinite_pencil(n, rng, true);
  const auto v = pk::random_subspace(n, n / 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(pk::rayleigh_ritz_bounds(p, v));
}
BENCHMARK(BM_RayleighRitz)->RangeMultiplier(2)->Range(8, 64);

}  // namespace

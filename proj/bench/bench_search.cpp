// Exhaustive circuit search: OpenMP kernel against the serial reference.
// Run with OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include "graph_essence/random.hpp"
#include "graph_essence/search.hpp"

namespace {

using namespace essence;

search::CostMatrix sym_costs(std::size_t n) {
  rnd::Rng rng(42 + n);
  return search::cost_matrix(rnd::random_sym(n, rng, -20, 20));
}

search::CostMatrix general_costs(std::size_t n) {
  rnd::Rng rng(7 + n);
  return search::cost_matrix(rnd::random_general(n, rng, -20, 20));
}

void BM_SymParallel(benchmark::State& state) {
  const auto m = sym_costs(state.range(0));
  const search::SearchSpec spec;
  for (auto _ : state) benchmark::DoNotOptimize(search::exhaustive_optimum(m, spec));
}

void BM_SymSerial(benchmark::State& state) {
  const auto m = sym_costs(state.range(0));
  const search::SearchSpec spec;
  for (auto _ : state) benchmark::DoNotOptimize(search::exhaustive_optimum_serial(m, spec));
}

void BM_GeneralParallel(benchmark::State& state) {
  const auto m = general_costs(state.range(0));
  const search::SearchSpec spec;
  for (auto _ : state) benchmark::DoNotOptimize(search::exhaustive_optimum(m, spec));
}

void BM_GeneralSerial(benchmark::State& state) {
  const auto m = general_costs(state.range(0));
  const search::SearchSpec spec;
  for (auto _ : state) benchmark::DoNotOptimize(search::exhaustive_optimum_serial(m, spec));
}

}  // namespace

BENCHMARK(BM_SymParallel)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymSerial)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GeneralParallel)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GeneralSerial)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "cactuswp/cactuswp.hpp"

namespace {

using namespace cactuswp;

// Roughly 3.75 vertices per block at p = 0.5, max cycle 12.
Graph bench_cactus(std::int64_t blocks) {
  return generate_random_cactus({static_cast<std::size_t>(blocks), 0.5, 12, 2024});
}

void BM_BlockDecomposition(benchmark::State& state) {
  const Graph g = bench_cactus(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(biconnected_blocks(g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.vertex_count()));
}

void BM_FormulaPath(benchmark::State& state) {
  const Graph g = bench_cactus(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wp_cactus(g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.vertex_count()));
}

void BM_BfsOracle(benchmark::State& state) {
  const Graph g = bench_cactus(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_distance3_pairs(g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.vertex_count()));
}

void BM_InducedG2Bruteforce(benchmark::State& state) {
  const Graph g = generate({Family::kMetaChain, 4, static_cast<int>(state.range(0)), 2});
  for (auto _ : state) benchmark::DoNotOptimize(count_induced_g2_bruteforce(g));
}

BENCHMARK(BM_BlockDecomposition)->RangeMultiplier(10)->Range(1'000, 100'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FormulaPath)->RangeMultiplier(10)->Range(1'000, 100'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BfsOracle)->RangeMultiplier(10)->Range(1'000, 100'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InducedG2Bruteforce)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

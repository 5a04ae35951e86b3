#include <benchmark/benchmark.h>

#include "dp3/dimer.hpp"
#include "dp3/formula.hpp"
#include "dp3/walk.hpp"

using namespace dp3;

namespace {

const LatticePoint kPoints[] = {{1, 2, 0}, {1, 2, -1}, {0, 3, 0}, {0, 3, -1}, {1, 3, 0}, {1, 3, -1}};

void BM_Enumerate(benchmark::State& state) {
  const LatticePoint p = kPoints[state.range(0)];
  const CutSubgraph g = core(cut(phi(p)));
  for (auto _ : state) benchmark::DoNotOptimize(partition_function(g, {Engine::enumerate, 1'000'000}));
  state.counters["matchings"] = static_cast<double>(predicted_count(p).get_ui());
  state.counters["vertices"] = static_cast<double>(g.vertices.size());
}
BENCHMARK(BM_Enumerate)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_Transfer(benchmark::State& state) {
  const LatticePoint p = kPoints[state.range(0)];
  const CutSubgraph g = core(cut(phi(p)));
  for (auto _ : state) benchmark::DoNotOptimize(partition_function(g, {Engine::transfer}));
  state.counters["matchings"] = static_cast<double>(predicted_count(p).get_ui());
  state.counters["width"] = static_cast<double>(transfer_width(g));
}
BENCHMARK(BM_Transfer)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_TransferDragon(benchmark::State& state) {
  const CutSubgraph g = core(cut(phi({0, static_cast<int>(state.range(0)), 1})));
  for (auto _ : state) benchmark::DoNotOptimize(partition_function(g, {Engine::transfer}));
  state.counters["vertices"] = static_cast<double>(g.vertices.size());
}
BENCHMARK(BM_TransferDragon)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_FormulaExpand(benchmark::State& state) {
  const LatticePoint p{static_cast<int>(state.range(0)), 3, -1};
  for (auto _ : state) benchmark::DoNotOptimize(cluster_variable(p));
}
BENCHMARK(BM_FormulaExpand)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_TauWord(benchmark::State& state) {
  const TauWord w{1, 2, 3, 1, 2, 3, 2, 1, 4};
  for (auto _ : state) benchmark::DoNotOptimize(apply_tau_word(initial_seed(), w));
}
BENCHMARK(BM_TauWord)->Unit(benchmark::kMillisecond);

void BM_Cut(benchmark::State& state) {
  const SixTuple t = phi({1, 3, -1});
  const TilingGraph window = build_window(window_radius_for(6));
  for (auto _ : state) benchmark::DoNotOptimize(core(cut(t, window)));
}
BENCHMARK(BM_Cut)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

// Serial reference vs OpenMP kernels. Arg 0 runs the serial path, arg 1 the
// parallel one with the default worker count.
#include <benchmark/benchmark.h>

#include "lcorbit/census.hpp"
#include "lcorbit/io.hpp"
#include "lcorbit/orbit.hpp"
#include "lcorbit/rankwidth.hpp"

namespace lcorbit {
namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
}

// Seven-qubit class with a labelled orbit of 1096 graph states.
const Graph& seven_qubit_seed() {
  static const Graph g = parse_graph6("F@U^?");
  return g;
}

void BM_ExploreLabelled(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(explore_labelled(seven_qubit_seed(), {.execution = mode(state)}));
  }
}
BENCHMARK(BM_ExploreLabelled)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ExploreUnlabelled(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(explore_unlabelled(seven_qubit_seed(), {.execution = mode(state)}));
  }
}
BENCHMARK(BM_ExploreUnlabelled)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Distances(benchmark::State& state) {
  const Orbit o = explore_labelled(seven_qubit_seed());
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances(o, mode(state)));
}
BENCHMARK(BM_Distances)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_AllGraphs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(all_graphs(7, mode(state)));
}
BENCHMARK(BM_AllGraphs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_RankWidth(benchmark::State& state) {
  // Petersen graph, rank-width 3.
  const std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                               {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}};
  const Graph g = Graph::from_edges(10, edges);
  for (auto _ : state) benchmark::DoNotOptimize(rank_width(g, {.execution = mode(state)}));
}
BENCHMARK(BM_RankWidth)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_classes(6, {.execution = mode(state), .labelled_summary = false}));
  }
}
BENCHMARK(BM_Census)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace lcorbit

BENCHMARK_MAIN();

#include <avgconn/avgconn.hpp>

#include <benchmark/benchmark.h>

using namespace avgconn;

namespace {

void BM_EnumerateCycle(benchmark::State& state) {
  const Graph g = make_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_connected_set(g, [&](VertexSet) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateCycle)->Arg(16)->Arg(64);

void BM_StatsWheel(benchmark::State& state) {
  const Graph g = make_wheel(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stats(g));
}
BENCHMARK(BM_StatsWheel)->Arg(12)->Arg(18);

void BM_StatsComplete(benchmark::State& state) {
  const Graph g = make_complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stats(g));
}
BENCHMARK(BM_StatsComplete)->Arg(20)->Arg(64);

void BM_TreeStatsPath(benchmark::State& state) {
  const Graph g = make_path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tree_stats(g));
}
BENCHMARK(BM_TreeStatsPath)->Arg(1000)->Arg(100000);

void BM_TreeLocalStatsStar(benchmark::State& state) {
  const Graph g = make_star(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tree_local_stats_all(g));
}
BENCHMARK(BM_TreeLocalStatsStar)->Arg(200);

void BM_AuxBuildAndCheck(benchmark::State& state) {
  const Graph g = make_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const AuxDigraph h = build_aux_digraph(g);
    benchmark::DoNotOptimize(verify_claims(h, classify_tops(h)).ok());
  }
}
BENCHMARK(BM_AuxBuildAndCheck)->Arg(8)->Arg(12);

void BM_GenerateConnected(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(generate_connected_graphs(static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_GenerateConnected)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_ScanLemmas(benchmark::State& state) {
  const std::vector<Graph> graphs = generate_connected_graphs(7);
  ScanOptions options;
  options.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan_lemmas(graphs, 7, options).passed());
}
BENCHMARK(BM_ScanLemmas)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();

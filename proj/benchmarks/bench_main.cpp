#include <benchmark/benchmark.h>

#include <random>

#include "eir/catalog.hpp"
#include "eir/even_connection.hpp"
#include "eir/generator_order.hpp"
#include "eir/graph_io.hpp"
#include "eir/harness.hpp"
#include "eir/resolution.hpp"

using namespace eir;

namespace {

Graph from(std::string_view edges) { return Graph::from_edges(parse_edge_tokens(edges)); }

Graph cycle(std::size_t n) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back("v" + std::to_string(i), "v" + std::to_string((i + 1) % n));
  return Graph::from_edges(edges);
}

// Square of a cycle edge ideal, polarized; arg is the cycle length.
MonomialIdeal polarized_square(std::size_t n) { return polarize(power(edge_ideal(cycle(n)), 2)).ideal; }

void BM_Hochster(benchmark::State& state) {
  const auto I = polarized_square(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hochster_betti(I).regularity());
}
BENCHMARK(BM_Hochster)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_Koszul(benchmark::State& state) {
  const auto I = polarized_square(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(koszul_betti(I).regularity());
}
BENCHMARK(BM_Koszul)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_Taylor(benchmark::State& state) {
  const auto I = power(edge_ideal(cycle(static_cast<std::size_t>(state.range(0)))), 2);
  for (auto _ : state) benchmark::DoNotOptimize(taylor_betti(I).regularity());
}
BENCHMARK(BM_Taylor)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

void BM_OrderingCheck(benchmark::State& state) {
  const auto graphs = graphs_on(5);
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    std::mt19937_64 rng(1);
    std::size_t checked = 0;
    for (const auto& g : graphs) {
      if (g.edge_count() == 0) continue;
      checked += verify_ordering(g, random_edge_order(g, rng), n).checked;
    }
    benchmark::DoNotOptimize(checked);
  }
}
BENCHMARK(BM_OrderingCheck)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_EvenConnectedPairs(benchmark::State& state) {
  const Graph g = from("xy,xu,xv,xz,yz,yw,uw,vz");
  const auto products = edge_multisets(g, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    std::size_t pairs = 0;
    for (const auto& ee : products) pairs += even_connected_pairs(g, ee).size();
    benchmark::DoNotOptimize(pairs);
  }
}
BENCHMARK(BM_EvenConnectedPairs)->DenseRange(1, 3);

void BM_EvenConnectedPairsSimplePaths(benchmark::State& state) {
  const Graph g = from("xy,xu,xv,xz,yz,yw,uw,vz");
  const auto products = edge_multisets(g, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    std::size_t pairs = 0;
    for (const auto& ee : products) pairs += even_connected_pairs_simple_paths(g, ee).size();
    benchmark::DoNotOptimize(pairs);
  }
}
BENCHMARK(BM_EvenConnectedPairsSimplePaths)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();

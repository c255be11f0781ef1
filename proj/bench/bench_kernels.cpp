#include <map>
#include <random>

#include <benchmark/benchmark.h>

#include "coauth/kernels.hpp"
#include "coauth/metrics.hpp"

namespace {

using namespace coauth;

// Ego network: focal node 0 joined to all, other pairs with probability p.
CoauthorshipGraph synthetic_ego(std::size_t n, double p) {
  std::mt19937_64 rng(n);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (NodeId v = 1; v < n; ++v) edges.push_back({0, v, 1});
  for (NodeId u = 1; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v, 1});
  return CoauthorshipGraph::from_edges(n, edges);
}

const CoauthorshipGraph& graph_for(std::int64_t n) {
  static std::map<std::int64_t, CoauthorshipGraph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, synthetic_ego(static_cast<std::size_t>(n), 0.05)).first;
  }
  return it->second;
}

template <auto Kernel>
void BM_Kernel(benchmark::State& state) {
  const auto& g = graph_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g));
  state.counters["nodes"] = static_cast<double>(g.node_count());
}

template <auto Multiply>
void BM_MatVec(benchmark::State& state) {
  const auto& g = graph_for(state.range(0));
  std::vector<double> x(g.node_count(), 1.0), y(g.node_count());
  for (auto _ : state) {
    Multiply(g, x, y, 1.0);
    benchmark::DoNotOptimize(y.data());
  }
}

void BM_Summarize(benchmark::State& state) {
  const auto& g = graph_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(summarize(g));
}

#define SIZES ->Arg(100)->Arg(400)->Arg(1600)->Unit(benchmark::kMillisecond)

BENCHMARK(BM_Kernel<kernels::serial::distance_sums>) SIZES;
BENCHMARK(BM_Kernel<kernels::distance_sums>) SIZES;
BENCHMARK(BM_Kernel<kernels::serial::betweenness>) SIZES;
BENCHMARK(BM_Kernel<kernels::betweenness>) SIZES;
BENCHMARK(BM_Kernel<kernels::serial::neighbor_links>) SIZES;
BENCHMARK(BM_Kernel<kernels::neighbor_links>) SIZES;
BENCHMARK(BM_MatVec<kernels::serial::shifted_adjacency_multiply>) SIZES;
BENCHMARK(BM_MatVec<kernels::shifted_adjacency_multiply>) SIZES;
BENCHMARK(BM_Summarize) SIZES;

}  // namespace

BENCHMARK_MAIN();

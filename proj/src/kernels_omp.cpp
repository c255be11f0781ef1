#include <algorithm>
#include <vector>

#include <omp.h>

#include "coauth/kernels.hpp"

namespace coauth::kernels {

namespace {

// Below this size thread start-up dominates the work.
constexpr std::size_t kParallelThreshold = 64;

// Source blocks for betweenness. Fixed independent of the thread count so
// the floating-point reduction order, and therefore the result, never
// depends on scheduling.
constexpr std::size_t kSourceBlocks = 64;

}  // namespace

DistanceSums distance_sums(const CoauthorshipGraph& g) {
  const std::size_t n = g.node_count();
  DistanceSums out{std::vector<std::int64_t>(n, 0), std::vector<int>(n, 0), true};
  bool connected = true;

#pragma omp parallel if (n >= kParallelThreshold) reduction(&& : connected)
  {
    std::vector<int> dist(n);
    std::vector<NodeId> queue(n);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t si = 0; si < static_cast<std::int64_t>(n); ++si) {
      const auto s = static_cast<NodeId>(si);
      std::fill(dist.begin(), dist.end(), -1);
      dist[s] = 0;
      std::size_t head = 0, tail = 0;
      queue[tail++] = s;
      std::int64_t total = 0;
      int ecc = 0;
      while (head < tail) {
        NodeId v = queue[head++];
        for (const auto& nb : g.neighbors(v)) {
          if (dist[nb.node] < 0) {
            dist[nb.node] = dist[v] + 1;
            total += dist[nb.node];
            ecc = dist[nb.node];
            queue[tail++] = nb.node;
          }
        }
      }
      out.total[s] = total;
      out.eccentricity[s] = ecc;
      if (tail != n) connected = false;
    }
  }
  out.connected = connected;
  return out;
}

std::vector<double> betweenness(const CoauthorshipGraph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) return {};
  const std::size_t blocks = std::min(n, kSourceBlocks);
  std::vector<double> partial(blocks * n, 0.0);

#pragma omp parallel if (n >= kParallelThreshold)
  {
    std::vector<int> dist(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<NodeId> order(n);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t bi = 0; bi < static_cast<std::int64_t>(blocks); ++bi) {
      const auto b = static_cast<std::size_t>(bi);
      double* acc = partial.data() + b * n;
      const std::size_t first = b * n / blocks;
      const std::size_t last = (b + 1) * n / blocks;
      for (std::size_t si = first; si < last; ++si) {
        const auto s = static_cast<NodeId>(si);
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        dist[s] = 0;
        sigma[s] = 1.0;
        std::size_t head = 0, tail = 0;
        order[tail++] = s;
        while (head < tail) {
          NodeId v = order[head++];
          for (const auto& nb : g.neighbors(v)) {
            NodeId w = nb.node;
            if (dist[w] < 0) {
              dist[w] = dist[v] + 1;
              order[tail++] = w;
            }
            if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
          }
        }
        for (std::size_t i = tail; i-- > 1;) {
          NodeId w = order[i];
          for (const auto& nb : g.neighbors(w)) {
            NodeId v = nb.node;
            if (dist[v] == dist[w] - 1) {
              delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
          }
          acc[w] += delta[w];
        }
      }
    }
  }

  std::vector<double> result(n, 0.0);
  for (std::size_t b = 0; b < blocks; ++b) {
    const double* acc = partial.data() + b * n;
    for (std::size_t v = 0; v < n; ++v) result[v] += acc[v];
  }
  for (auto& x : result) x /= 2.0;
  return result;
}

std::vector<std::int64_t> neighbor_links(const CoauthorshipGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::int64_t> links(n, 0);

#pragma omp parallel if (n >= kParallelThreshold)
  {
    std::vector<char> mark(n, 0);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t vi = 0; vi < static_cast<std::int64_t>(n); ++vi) {
      const auto v = static_cast<NodeId>(vi);
      for (const auto& nb : g.neighbors(v)) mark[nb.node] = 1;
      std::int64_t count = 0;
      for (const auto& u : g.neighbors(v)) {
        for (const auto& w : g.neighbors(u.node)) {
          if (w.node > u.node && mark[w.node]) ++count;
        }
      }
      links[v] = count;
      for (const auto& nb : g.neighbors(v)) mark[nb.node] = 0;
    }
  }
  return links;
}

void shifted_adjacency_multiply(const CoauthorshipGraph& g,
                                std::span<const double> x, std::span<double> y,
                                double shift) {
  const auto n = static_cast<std::int64_t>(g.node_count());
#pragma omp parallel for schedule(static) if (n >= static_cast<std::int64_t>(kParallelThreshold))
  for (std::int64_t vi = 0; vi < n; ++vi) {
    const auto v = static_cast<NodeId>(vi);
    double sum = shift * x[v];
    for (const auto& nb : g.neighbors(v)) sum += x[nb.node];
    y[v] = sum;
  }
}

}  // namespace coauth::kernels

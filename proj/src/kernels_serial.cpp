#include <algorithm>
#include <vector>

#include "coauth/kernels.hpp"

namespace coauth::kernels::serial {

DistanceSums distance_sums(const CoauthorshipGraph& g) {
  const std::size_t n = g.node_count();
  DistanceSums out{std::vector<std::int64_t>(n, 0), std::vector<int>(n, 0), true};
  std::vector<int> dist(n);
  std::vector<NodeId> queue(n);
  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      NodeId v = queue[head++];
      for (const auto& nb : g.neighbors(v)) {
        if (dist[nb.node] < 0) {
          dist[nb.node] = dist[v] + 1;
          out.total[s] += dist[nb.node];
          out.eccentricity[s] = dist[nb.node];
          queue[tail++] = nb.node;
        }
      }
    }
    if (tail != n) out.connected = false;
  }
  return out;
}

std::vector<double> betweenness(const CoauthorshipGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> acc(n, 0.0);
  std::vector<int> dist(n);
  std::vector<double> sigma(n), delta(n);
  std::vector<NodeId> order(n);
  for (NodeId s = 0; s < n; ++s) {
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
    // Predecessors of w are the neighbors one level closer to s.
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
  // Every unordered pair was counted from both endpoints.
  for (auto& x : acc) x /= 2.0;
  return acc;
}

std::vector<std::int64_t> neighbor_links(const CoauthorshipGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::int64_t> links(n, 0);
  std::vector<char> mark(n, 0);
  for (NodeId v = 0; v < n; ++v) {
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
  return links;
}

void shifted_adjacency_multiply(const CoauthorshipGraph& g,
                                std::span<const double> x, std::span<double> y,
                                double shift) {
  for (NodeId v = 0; v < g.node_count(); ++v) {
    double sum = shift * x[v];
    for (const auto& nb : g.neighbors(v)) sum += x[nb.node];
    y[v] = sum;
  }
}

}  // namespace coauth::kernels::serial

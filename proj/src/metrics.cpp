#include "coauth/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <exception>
#include <numeric>
#include <sstream>
#include <string>

#include "coauth/error.hpp"
#include "coauth/kernels.hpp"

namespace coauth {

namespace {

void require_nodes(const CoauthorshipGraph& g, std::size_t min, std::string_view op) {
  if (g.node_count() < min) {
    throw Error(ErrorCode::TooSmall, std::string(op) + " needs at least " +
                                         std::to_string(min) + " nodes, got " +
                                         std::to_string(g.node_count()));
  }
}

__extension__ using Wide = __int128;

[[noreturn]] void not_connected(std::string_view op) {
  throw Error(ErrorCode::NotConnected, std::string(op) + ": graph is not connected");
}

void require_connected(const CoauthorshipGraph& g, std::string_view op) {
  if (!is_connected(g)) not_connected(op);
}

}  // namespace

std::string_view metric_id(Metric m) noexcept {
  switch (m) {
    case Metric::DC: return "DC";
    case Metric::WD: return "WD";
    case Metric::APL: return "APL";
    case Metric::AS: return "AS";
    case Metric::TR: return "TR";
    case Metric::CC: return "CC";
    case Metric::EC: return "EC";
    case Metric::BC: return "BC";
    case Metric::CL: return "CL";
  }
  return "?";
}

std::string_view metric_name(Metric m) noexcept {
  switch (m) {
    case Metric::DC: return "Degree Centrality";
    case Metric::WD: return "Weighted Degree";
    case Metric::APL: return "Average Path Length";
    case Metric::AS: return "Assortativity";
    case Metric::TR: return "Transitivity";
    case Metric::CC: return "Clustering Coefficient";
    case Metric::EC: return "Eigenvector Centrality";
    case Metric::BC: return "Betweenness Centrality";
    case Metric::CL: return "Closeness Centrality";
  }
  return "?";
}

Metric parse_metric(std::string_view id) {
  std::string upper(id);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "COC") return Metric::CL;
  if (upper == "PL") return Metric::APL;
  for (Metric m : kAllMetrics) {
    if (upper == metric_id(m)) return m;
  }
  std::string known;
  for (Metric m : kAllMetrics) {
    if (!known.empty()) known += ", ";
    known += metric_id(m);
  }
  throw Error(ErrorCode::UnknownMetric,
              "unknown metric '" + std::string(id) + "' (expected one of " + known + ")");
}

double NodeVector::average() const {
  if (values.empty()) return 0.0;
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

std::optional<double> MetricRow::value(Metric m) const {
  switch (m) {
    case Metric::DC: return avg_dc;
    case Metric::WD: return avg_wd;
    case Metric::APL: return avg_apl;
    case Metric::AS: return assortativity;
    case Metric::TR: return transitivity;
    case Metric::CC: return avg_cc;
    case Metric::EC: return avg_ec;
    case Metric::BC: return avg_bc;
    case Metric::CL: return avg_cl;
  }
  return std::nullopt;
}

NodeVector degree_centrality(const CoauthorshipGraph& g) {
  require_nodes(g, 2, "degree_centrality");
  const double scale = 1.0 / static_cast<double>(g.node_count() - 1);
  NodeVector out{Metric::DC, std::vector<double>(g.node_count())};
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out.values[v] = static_cast<double>(g.degree(v)) * scale;
  }
  return out;
}

NodeVector weighted_degree(const CoauthorshipGraph& g) {
  NodeVector out{Metric::WD, std::vector<double>(g.node_count())};
  for (NodeId v = 0; v < g.node_count(); ++v) {
    Weight sum = 0;
    for (const auto& nb : g.neighbors(v)) sum += nb.weight;
    out.values[v] = static_cast<double>(sum);
  }
  return out;
}

double average_path_length(const CoauthorshipGraph& g) {
  require_nodes(g, 2, "average_path_length");
  auto sums = kernels::distance_sums(g);
  if (!sums.connected) not_connected("average_path_length");
  const std::int64_t total = std::accumulate(sums.total.begin(), sums.total.end(),
                                             std::int64_t{0});
  const auto n = static_cast<double>(g.node_count());
  return static_cast<double>(total) / (n * (n - 1.0));
}

std::optional<double> degree_assortativity(const CoauthorshipGraph& g) {
  if (g.edge_count() == 0) {
    throw Error(ErrorCode::NoEdges, "degree_assortativity: graph has no edges");
  }
  // Each undirected edge contributes both orientations, so the two endpoint
  // series share mean and variance; exact integer moments decide whether the
  // variance vanishes.
  Wide stubs = 0, sum = 0, sum_sq = 0, sum_prod = 0;
  for (const auto& e : g.edges()) {
    const auto a = static_cast<Wide>(g.degree(e.source));
    const auto b = static_cast<Wide>(g.degree(e.target));
    stubs += 2;
    sum += a + b;
    sum_sq += a * a + b * b;
    sum_prod += 2 * a * b;
  }
  const Wide variance = stubs * sum_sq - sum * sum;
  if (variance == 0) return std::nullopt;
  const Wide covariance = stubs * sum_prod - sum * sum;
  return static_cast<double>(covariance) / static_cast<double>(variance);
}

double transitivity(const CoauthorshipGraph& g) {
  auto links = kernels::neighbor_links(g);
  std::int64_t closed = 0;  // = 3 x triangles
  std::int64_t triples = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const auto k = static_cast<std::int64_t>(g.degree(v));
    closed += links[v];
    triples += k * (k - 1) / 2;
  }
  if (triples == 0) return 0.0;
  return static_cast<double>(closed) / static_cast<double>(triples);
}

NodeVector clustering(const CoauthorshipGraph& g) {
  auto links = kernels::neighbor_links(g);
  NodeVector out{Metric::CC, std::vector<double>(g.node_count(), 0.0)};
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const auto k = static_cast<double>(g.degree(v));
    if (k > 1) out.values[v] = 2.0 * static_cast<double>(links[v]) / (k * (k - 1.0));
  }
  return out;
}

NodeVector eigenvector_centrality(const CoauthorshipGraph& g,
                                  PowerIterationOptions options) {
  require_nodes(g, 1, "eigenvector_centrality");
  require_connected(g, "eigenvector_centrality");
  const std::size_t n = g.node_count();
  // Iterating A + I instead of A keeps the dominant eigenvalue strictly
  // largest in magnitude on bipartite graphs, where A alone oscillates.
  constexpr double kShift = 1.0;

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> next(n);
  double delta = 0.0;
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    kernels::shifted_adjacency_multiply(g, x, next, kShift);
    double norm = 0.0;
    for (double v : next) norm += v * v;
    norm = std::sqrt(norm);
    delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] /= norm;
      const double d = next[i] - x[i];
      delta += d * d;
    }
    delta = std::sqrt(delta);
    x.swap(next);
    if (delta < options.tolerance) return NodeVector{Metric::EC, std::move(x)};
  }
  std::ostringstream msg;
  msg << "eigenvector_centrality: no convergence after " << options.max_iterations
      << " iterations (last iterate delta " << delta << ")";
  throw Error(ErrorCode::NoConvergence, msg.str());
}

NodeVector betweenness_centrality(const CoauthorshipGraph& g) {
  require_nodes(g, 3, "betweenness_centrality");
  require_connected(g, "betweenness_centrality");
  auto raw = kernels::betweenness(g);
  const auto n = static_cast<double>(g.node_count());
  const double pairs = (n - 1.0) * (n - 2.0) / 2.0;
  for (auto& x : raw) x /= pairs;
  return NodeVector{Metric::BC, std::move(raw)};
}

NodeVector closeness_centrality(const CoauthorshipGraph& g) {
  require_nodes(g, 2, "closeness_centrality");
  auto sums = kernels::distance_sums(g);
  if (!sums.connected) not_connected("closeness_centrality");
  const auto reach = static_cast<double>(g.node_count() - 1);
  NodeVector out{Metric::CL, std::vector<double>(g.node_count())};
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out.values[v] = reach / static_cast<double>(sums.total[v]);
  }
  return out;
}

MetricRow summarize(const CoauthorshipGraph& g) {
  require_nodes(g, 3, "summarize");
  auto sums = kernels::distance_sums(g);
  if (!sums.connected) not_connected("summarize");

  const std::size_t n = g.node_count();
  const auto nd = static_cast<double>(n);
  MetricRow row;
  row.diameter = *std::max_element(sums.eccentricity.begin(), sums.eccentricity.end());
  row.avg_dc = degree_centrality(g).average();
  row.avg_wd = weighted_degree(g).average();

  const std::int64_t total = std::accumulate(sums.total.begin(), sums.total.end(),
                                             std::int64_t{0});
  row.avg_apl = static_cast<double>(total) / (nd * (nd - 1.0));
  row.assortativity = degree_assortativity(g);

  row.transitivity = transitivity(g);
  row.avg_cc = clustering(g).average();
  row.avg_ec = eigenvector_centrality(g).average();
  row.avg_bc = betweenness_centrality(g).average();

  double cl_sum = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    cl_sum += (nd - 1.0) / static_cast<double>(sums.total[v]);
  }
  row.avg_cl = cl_sum / nd;
  return row;
}

std::vector<MetricRow> summarize_all(std::span<const CoauthorshipGraph> graphs) {
  std::vector<MetricRow> rows(graphs.size());
  std::vector<std::exception_ptr> errors(graphs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(graphs.size()); ++i) {
    try {
      rows[static_cast<std::size_t>(i)] = summarize(graphs[static_cast<std::size_t>(i)]);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

}  // namespace coauth

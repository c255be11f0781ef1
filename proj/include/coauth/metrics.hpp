#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "coauth/graph.hpp"

namespace coauth {

/// The nine per-network metric columns, in table order.
enum class Metric { DC, WD, APL, AS, TR, CC, EC, BC, CL };

inline constexpr std::array<Metric, 9> kAllMetrics = {
    Metric::DC, Metric::WD, Metric::APL, Metric::AS, Metric::TR,
    Metric::CC, Metric::EC, Metric::BC,  Metric::CL};

std::string_view metric_id(Metric m) noexcept;
std::string_view metric_name(Metric m) noexcept;
/// Accepts the short ids (DC, WD, ...), case-insensitively. "CoC" and "PL"
/// are accepted as aliases. Throws Error{UnknownMetric}.
Metric parse_metric(std::string_view id);

/// Per-node values, index-aligned with the graph's nodes.
struct NodeVector {
  Metric metric;
  std::vector<double> values;

  double average() const;
};

/// One row of a network-properties table: the diameter plus nine averages.
/// `assortativity` is empty when undefined (zero endpoint-degree variance).
struct MetricRow {
  int diameter = 0;
  double avg_dc = 0;
  double avg_wd = 0;
  double avg_apl = 0;
  std::optional<double> assortativity;
  double transitivity = 0;
  double avg_cc = 0;
  double avg_ec = 0;
  double avg_bc = 0;
  double avg_cl = 0;

  std::optional<double> value(Metric m) const;
};

NodeVector degree_centrality(const CoauthorshipGraph& g);
NodeVector weighted_degree(const CoauthorshipGraph& g);
double average_path_length(const CoauthorshipGraph& g);
std::optional<double> degree_assortativity(const CoauthorshipGraph& g);
double transitivity(const CoauthorshipGraph& g);
NodeVector clustering(const CoauthorshipGraph& g);

struct PowerIterationOptions {
  double tolerance = 1e-12;
  int max_iterations = 100000;
};

/// Dominant eigenvector of the unweighted adjacency matrix, non-negative and
/// scaled to unit Euclidean norm.
NodeVector eigenvector_centrality(const CoauthorshipGraph& g,
                                  PowerIterationOptions options = {});
NodeVector betweenness_centrality(const CoauthorshipGraph& g);
NodeVector closeness_centrality(const CoauthorshipGraph& g);

MetricRow summarize(const CoauthorshipGraph& g);

/// Summarizes independent graphs in parallel; output order matches input.
std::vector<MetricRow> summarize_all(std::span<const CoauthorshipGraph> graphs);

}  // namespace coauth

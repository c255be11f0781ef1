#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace coauth {

using NodeId = std::uint32_t;
using Weight = std::int64_t;

/// Author identity after whitespace normalization. Two labels name the same
/// node iff their normalized strings are byte-identical.
class AuthorLabel {
 public:
  /// Strips leading/trailing whitespace and collapses internal runs to a
  /// single space. Throws Error{EmptyLabel} when nothing is left.
  static AuthorLabel normalize(std::string_view raw);

  const std::string& str() const noexcept { return name_; }

  friend bool operator==(const AuthorLabel&, const AuthorLabel&) = default;
  friend auto operator<=>(const AuthorLabel&, const AuthorLabel&) = default;

 private:
  explicit AuthorLabel(std::string name) : name_(std::move(name)) {}
  std::string name_;
};

inline AuthorLabel normalize_author(std::string_view raw) {
  return AuthorLabel::normalize(raw);
}

struct PublicationRecord {
  std::string paper_id;
  std::vector<AuthorLabel> authors;  // unique, first-occurrence order
  std::optional<int> year;

  /// Builds a record from raw names: normalizes, drops empty tokens and
  /// collapses duplicates. Throws Error{EmptyAuthors} if none remain.
  static PublicationRecord make(std::string paper_id,
                                const std::vector<std::string>& raw_authors,
                                std::optional<int> year = std::nullopt);

  bool has_author(const AuthorLabel& label) const;

  friend bool operator==(const PublicationRecord&,
                         const PublicationRecord&) = default;
};

struct Neighbor {
  NodeId node;
  Weight weight;
};

struct Edge {
  NodeId source;
  NodeId target;
  Weight weight;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected simple graph with positive integer edge weights and interned
/// author labels. Immutable once constructed; neighbor lists are sorted by
/// node id.
class CoauthorshipGraph {
 public:
  /// Validates and freezes a graph. Edges are kept in the given order for
  /// export. Throws Error{InvalidGraph} on self-loops, repeated pairs,
  /// non-positive weights, out-of-range ids, duplicate labels, or a focal
  /// node that is not adjacent to every other node.
  CoauthorshipGraph(std::vector<AuthorLabel> labels, std::vector<Edge> edges,
                    std::optional<NodeId> focal = std::nullopt);

  /// Unlabeled convenience constructor; nodes are named "0".."n-1".
  static CoauthorshipGraph from_edges(std::size_t n, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const AuthorLabel& label(NodeId v) const { return labels_.at(v); }
  std::span<const AuthorLabel> labels() const noexcept { return labels_; }
  std::optional<NodeId> index_of(const AuthorLabel& label) const;
  std::optional<NodeId> focal() const noexcept { return focal_; }

  std::span<const Neighbor> neighbors(NodeId v) const noexcept {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }
  bool adjacent(NodeId u, NodeId v) const noexcept;
  std::optional<Weight> weight(NodeId u, NodeId v) const noexcept;

  /// Edges in insertion order.
  std::span<const Edge> edges() const noexcept { return edges_; }

  friend bool operator==(const CoauthorshipGraph& a,
                         const CoauthorshipGraph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_ &&
           a.focal_ == b.focal_;
  }

 private:
  std::vector<AuthorLabel> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
  std::optional<NodeId> focal_;
};

/// Ego co-authorship network of `focal`: every record listing the focal
/// author contributes +1 weight to each pair of its authors. Records without
/// the focal author are ignored. Node order is first appearance, focal first.
CoauthorshipGraph build_ego_network(std::span<const PublicationRecord> records,
                                    const AuthorLabel& focal);

/// Largest unweighted shortest-path length; 0 for a single node.
int diameter(const CoauthorshipGraph& g);

bool is_connected(const CoauthorshipGraph& g);

// Exports. Node order is insertion order.
void write_edge_list_csv(std::ostream& out, const CoauthorshipGraph& g);
void write_dot(std::ostream& out, const CoauthorshipGraph& g);
void write_graph_json(std::ostream& out, const CoauthorshipGraph& g);
CoauthorshipGraph read_graph_json(std::string_view text);

}  // namespace coauth

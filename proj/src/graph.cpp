#include "coauth/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "coauth/error.hpp"
#include "coauth/kernels.hpp"

namespace coauth {

namespace {

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

std::string invalid(std::string_view what) {
  return "invalid graph: " + std::string(what);
}

}  // namespace

AuthorLabel AuthorLabel::normalize(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char c : raw) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  if (out.empty()) {
    throw Error(ErrorCode::EmptyLabel, "author label is empty after normalization");
  }
  return AuthorLabel(std::move(out));
}

PublicationRecord PublicationRecord::make(
    std::string paper_id, const std::vector<std::string>& raw_authors,
    std::optional<int> year) {
  PublicationRecord rec{std::move(paper_id), {}, year};
  for (const auto& raw : raw_authors) {
    if (std::all_of(raw.begin(), raw.end(), is_space)) continue;
    auto label = AuthorLabel::normalize(raw);
    if (!rec.has_author(label)) rec.authors.push_back(std::move(label));
  }
  if (rec.authors.empty()) {
    throw Error(ErrorCode::EmptyAuthors,
                "record '" + rec.paper_id + "' has no authors");
  }
  return rec;
}

bool PublicationRecord::has_author(const AuthorLabel& label) const {
  return std::find(authors.begin(), authors.end(), label) != authors.end();
}

CoauthorshipGraph::CoauthorshipGraph(std::vector<AuthorLabel> labels,
                                     std::vector<Edge> edges,
                                     std::optional<NodeId> focal)
    : labels_(std::move(labels)), edges_(std::move(edges)), focal_(focal) {
  const std::size_t n = labels_.size();
  index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(labels_[i].str(), static_cast<NodeId>(i)).second) {
      throw Error(ErrorCode::InvalidGraph,
                  invalid("duplicate label '" + labels_[i].str() + "'"));
    }
  }

  std::vector<std::size_t> deg(n, 0);
  for (const auto& e : edges_) {
    if (e.source >= n || e.target >= n) {
      throw Error(ErrorCode::InvalidGraph, invalid("edge endpoint out of range"));
    }
    if (e.source == e.target) {
      throw Error(ErrorCode::InvalidGraph, invalid("self-loop"));
    }
    if (e.weight < 1) {
      throw Error(ErrorCode::InvalidGraph, invalid("edge weight must be >= 1"));
    }
    ++deg[e.source];
    ++deg[e.target];
  }

  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    adjacency_[fill[e.source]++] = {e.target, e.weight};
    adjacency_[fill[e.target]++] = {e.source, e.weight};
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last,
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
    if (std::adjacent_find(first, last, [](const Neighbor& a, const Neighbor& b) {
          return a.node == b.node;
        }) != last) {
      throw Error(ErrorCode::InvalidGraph, invalid("parallel edge"));
    }
  }

  if (focal_) {
    if (*focal_ >= n) {
      throw Error(ErrorCode::InvalidGraph, invalid("focal out of range"));
    }
    if (degree(*focal_) + 1 != n) {
      throw Error(ErrorCode::InvalidGraph,
                  invalid("focal node is not adjacent to every other node"));
    }
  }
}

CoauthorshipGraph CoauthorshipGraph::from_edges(std::size_t n,
                                                std::vector<Edge> edges) {
  std::vector<AuthorLabel> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(AuthorLabel::normalize(std::to_string(i)));
  }
  return CoauthorshipGraph(std::move(labels), std::move(edges));
}

std::optional<NodeId> CoauthorshipGraph::index_of(const AuthorLabel& label) const {
  auto it = index_.find(label.str());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool CoauthorshipGraph::adjacent(NodeId u, NodeId v) const noexcept {
  return weight(u, v).has_value();
}

std::optional<Weight> CoauthorshipGraph::weight(NodeId u, NodeId v) const noexcept {
  if (u >= node_count() || v >= node_count()) return std::nullopt;
  auto nbrs = neighbors(u);
  auto it = std::lower_bound(
      nbrs.begin(), nbrs.end(), v,
      [](const Neighbor& a, NodeId id) { return a.node < id; });
  if (it == nbrs.end() || it->node != v) return std::nullopt;
  return it->weight;
}

CoauthorshipGraph build_ego_network(std::span<const PublicationRecord> records,
                                    const AuthorLabel& focal) {
  std::vector<AuthorLabel> labels{focal};
  std::unordered_map<std::string, NodeId> ids{{focal.str(), 0}};
  // Keyed by ordered pair; value = (first-seen rank, weight) so export order
  // follows first co-occurrence.
  std::map<std::pair<NodeId, NodeId>, std::pair<std::size_t, Weight>> pairs;
  bool seen_focal = false;

  for (const auto& rec : records) {
    if (!rec.has_author(focal)) continue;
    seen_focal = true;
    std::vector<NodeId> members;
    members.reserve(rec.authors.size());
    for (const auto& a : rec.authors) {
      auto [it, inserted] =
          ids.emplace(a.str(), static_cast<NodeId>(labels.size()));
      if (inserted) labels.push_back(a);
      if (std::find(members.begin(), members.end(), it->second) == members.end()) {
        members.push_back(it->second);
      }
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        auto key = std::minmax(members[i], members[j]);
        auto [it, inserted] = pairs.try_emplace(key, pairs.size(), 0);
        ++it->second.second;
      }
    }
  }
  if (!seen_focal) {
    throw Error(ErrorCode::FocalAbsent,
                "focal author not found: '" + focal.str() + "'");
  }

  std::vector<Edge> edges(pairs.size());
  for (const auto& [key, value] : pairs) {
    edges[value.first] = {key.first, key.second, value.second};
  }
  return CoauthorshipGraph(std::move(labels), std::move(edges), NodeId{0});
}

bool is_connected(const CoauthorshipGraph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::queue<NodeId> frontier;
  frontier.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    NodeId v = frontier.front();
    frontier.pop();
    for (const auto& nb : g.neighbors(v)) {
      if (!seen[nb.node]) {
        seen[nb.node] = 1;
        ++reached;
        frontier.push(nb.node);
      }
    }
  }
  return reached == n;
}

int diameter(const CoauthorshipGraph& g) {
  if (g.node_count() == 0) {
    throw Error(ErrorCode::TooSmall, "diameter of an empty graph");
  }
  auto sums = kernels::distance_sums(g);
  if (!sums.connected) {
    throw Error(ErrorCode::NotConnected, "diameter: graph is not connected");
  }
  return *std::max_element(sums.eccentricity.begin(), sums.eccentricity.end());
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

void write_edge_list_csv(std::ostream& out, const CoauthorshipGraph& g) {
  out << "source,target,weight\n";
  for (const auto& e : g.edges()) {
    out << csv_field(g.label(e.source).str()) << ','
        << csv_field(g.label(e.target).str()) << ',' << e.weight << '\n';
  }
}

void write_dot(std::ostream& out, const CoauthorshipGraph& g) {
  out << "graph coauthorship {\n";
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out << "  " << dot_quote(g.label(v).str());
    if (g.focal() == v) out << " [focal=true]";
    out << ";\n";
  }
  for (const auto& e : g.edges()) {
    out << "  " << dot_quote(g.label(e.source).str()) << " -- "
        << dot_quote(g.label(e.target).str()) << " [weight=" << e.weight
        << "];\n";
  }
  out << "}\n";
}

void write_graph_json(std::ostream& out, const CoauthorshipGraph& g) {
  nlohmann::ordered_json doc;
  doc["focal"] = g.focal() ? nlohmann::ordered_json(g.label(*g.focal()).str())
                           : nlohmann::ordered_json(nullptr);
  auto nodes = nlohmann::ordered_json::array();
  for (const auto& l : g.labels()) nodes.push_back(l.str());
  doc["nodes"] = std::move(nodes);
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({{"source", g.label(e.source).str()},
                     {"target", g.label(e.target).str()},
                     {"weight", e.weight}});
  }
  doc["edges"] = std::move(edges);
  out << doc.dump(2) << '\n';
}

CoauthorshipGraph read_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
    std::vector<AuthorLabel> labels;
    std::unordered_map<std::string, NodeId> ids;
    for (const auto& node : doc.at("nodes")) {
      auto label = AuthorLabel::normalize(node.get<std::string>());
      ids.emplace(label.str(), static_cast<NodeId>(labels.size()));
      labels.push_back(std::move(label));
    }
    auto lookup = [&](const nlohmann::json& name) {
      auto it = ids.find(AuthorLabel::normalize(name.get<std::string>()).str());
      if (it == ids.end()) {
        throw Error(ErrorCode::ParseError,
                    "graph JSON: edge refers to unknown node " + name.dump());
      }
      return it->second;
    };
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      edges.push_back({lookup(e.at("source")), lookup(e.at("target")),
                       e.at("weight").get<Weight>()});
    }
    std::optional<NodeId> focal;
    if (doc.contains("focal") && !doc["focal"].is_null()) {
      focal = lookup(doc["focal"]);
    }
    return CoauthorshipGraph(std::move(labels), std::move(edges), focal);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::ParseError, std::string("graph JSON: ") + ex.what());
  }
}

}  // namespace coauth

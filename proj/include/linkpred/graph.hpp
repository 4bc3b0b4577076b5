#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace linkpred {

using NodeId = std::uint32_t;

// Unordered node pair, always stored with u < v.
struct NodePair {
  NodeId u = 0;
  NodeId v = 0;

  static NodePair of(NodeId a, NodeId b) noexcept { return a < b ? NodePair{a, b} : NodePair{b, a}; }
  std::uint64_t key() const noexcept { return (std::uint64_t{u} << 32) | v; }
  static NodePair from_key(std::uint64_t key) noexcept {
    return {static_cast<NodeId>(key >> 32), static_cast<NodeId>(key & 0xffffffffULL)};
  }

  friend bool operator==(const NodePair&, const NodePair&) = default;
  friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

struct WeightedEdge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 1.0;
};

// Immutable undirected weighted graph in compressed adjacency form. Node ids
// are dense, labels are arbitrary strings. Each adjacency list is sorted by
// neighbour id.
class Graph {
 public:
  struct Neighbor {
    NodeId node;
    double weight;
  };

  Graph() = default;

  // Validates: endpoints in range, no self-loops, no duplicate edges (in
  // either orientation), strictly positive weights. Throws DataError.
  static Graph from_edges(std::vector<std::string> labels, std::span<const WeightedEdge> edges);

  // Unlabelled convenience constructor; labels are "0", "1", ...
  static Graph from_edges(std::size_t node_count, std::span<const WeightedEdge> edges);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

  std::span<const Neighbor> neighbors(NodeId u) const noexcept {
    return {neighbors_.data() + offsets_[u], neighbors_.data() + offsets_[u + 1]};
  }
  std::size_t degree(NodeId u) const noexcept { return offsets_[u + 1] - offsets_[u]; }

  bool has_edge(NodeId u, NodeId v) const noexcept;
  bool is_unweighted() const noexcept { return unweighted_; }

  const std::string& label(NodeId u) const { return labels_.at(u); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<NodeId> find(std::string_view label) const;

  // Every undirected edge once, u < v, in ascending (u, v) order.
  std::vector<WeightedEdge> edges() const;

  // Same node set, with the given pairs removed (pairs must be edges).
  Graph without_edges(std::span<const NodePair> removed) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> neighbors_;
  bool unweighted_ = true;
};

struct EdgeListOptions {
  bool weighted = false;
};

struct LoadedGraph {
  Graph graph;
  std::size_t duplicate_edges = 0;  // repeated lines, either orientation
};

// Parses "u v [w]" lines. '#' (and '%', as used by KONECT dumps) start a
// comment. Without `weighted`, a third column is validated but ignored.
LoadedGraph load_edge_list(std::istream& in, const EdgeListOptions& options = {});
LoadedGraph load_edge_list(std::string_view text, const EdgeListOptions& options = {});
LoadedGraph load_edge_list_file(const std::string& path, const EdgeListOptions& options = {});

// One undirected edge per line in ascending id order; weights are written
// only when `with_weights` is set.
void write_edge_list(const Graph& graph, std::ostream& out, bool with_weights = false);

// 64-bit FNV-1a digest of the node count and the sorted label-pair edge
// lines, hex encoded. Independent of node id order.
std::string graph_checksum(const Graph& graph);

// All unordered pairs {u, v}, u != v, without an edge, ascending order.
std::vector<NodePair> nonadjacent_pairs(const Graph& graph);

// Visits the same pairs as nonadjacent_pairs without materialising them.
template <class Visitor>
void for_each_nonadjacent_pair(const Graph& graph, Visitor&& visit) {
  const auto n = static_cast<NodeId>(graph.node_count());
  for (NodeId u = 0; u < n; ++u) {
    auto adjacent = graph.neighbors(u);
    auto it = adjacent.begin();
    for (NodeId v = u + 1; v < n; ++v) {
      while (it != adjacent.end() && it->node < v) ++it;
      if (it != adjacent.end() && it->node == v) continue;
      visit(NodePair{u, v});
    }
  }
}

// Unrestricted Dijkstra from `source`; unreachable nodes get +infinity.
std::vector<double> shortest_path_distances(const Graph& graph, NodeId source);

}  // namespace linkpred

#include "linkpred/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>
#include <unordered_set>

#include "linkpred/error.hpp"

namespace linkpred {

Graph Graph::from_edges(std::vector<std::string> labels, std::span<const WeightedEdge> edges) {
  Graph g;
  const std::size_t n = labels.size();
  if (n > std::numeric_limits<NodeId>::max()) throw DataError("too many nodes");
  g.labels_ = std::move(labels);
  g.index_.reserve(n);
  for (NodeId i = 0; i < n; ++i) {
    if (!g.index_.emplace(g.labels_[i], i).second) {
      throw DataError("duplicate node label '" + g.labels_[i] + "'");
    }
  }

  std::vector<std::size_t> degree(n, 0);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) throw DataError("edge endpoint out of range");
    if (e.u == e.v) throw DataError("self-loop on node '" + g.labels_[e.u] + "'");
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw DataError("edge weight must be a positive finite number");
    }
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + degree[i];
  g.neighbors_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : edges) {
    g.neighbors_[cursor[e.u]++] = {e.v, e.weight};
    g.neighbors_[cursor[e.v]++] = {e.u, e.weight};
    if (e.weight != 1.0) g.unweighted_ = false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto first = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]);
    auto last = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]);
    std::sort(first, last, [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
    auto dup = std::adjacent_find(first, last,
                                  [](const Neighbor& a, const Neighbor& b) { return a.node == b.node; });
    if (dup != last) {
      throw DataError("duplicate edge between '" + g.labels_[i] + "' and '" + g.labels_[dup->node] + "'");
    }
  }
  return g;
}

Graph Graph::from_edges(std::size_t node_count, std::span<const WeightedEdge> edges) {
  std::vector<std::string> labels;
  labels.reserve(node_count);
  for (std::size_t i = 0; i < node_count; ++i) labels.push_back(std::to_string(i));
  return from_edges(std::move(labels), edges);
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
  if (u >= node_count() || v >= node_count()) return false;
  auto adjacent = neighbors(u);
  auto it = std::lower_bound(adjacent.begin(), adjacent.end(), v,
                             [](const Neighbor& a, NodeId x) { return a.node < x; });
  return it != adjacent.end() && it->node == v;
}

std::optional<NodeId> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<WeightedEdge> Graph::edges() const {
  std::vector<WeightedEdge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (const auto& nb : neighbors(u)) {
      if (u < nb.node) out.push_back({u, nb.node, nb.weight});
    }
  }
  return out;
}

Graph Graph::without_edges(std::span<const NodePair> removed) const {
  std::unordered_set<std::uint64_t> drop;
  drop.reserve(removed.size() * 2);
  for (const auto& p : removed) {
    if (!has_edge(p.u, p.v)) throw std::invalid_argument("without_edges: pair is not an edge");
    drop.insert(NodePair::of(p.u, p.v).key());
  }
  std::vector<WeightedEdge> kept;
  kept.reserve(edge_count() - drop.size());
  for (const auto& e : edges()) {
    if (!drop.contains(NodePair{e.u, e.v}.key())) kept.push_back(e);
  }
  return from_edges(labels_, kept);
}

namespace {

bool parse_weight(std::string_view token, double& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in, const EdgeListOptions& options) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> index;
  std::vector<WeightedEdge> edges;
  std::unordered_set<std::uint64_t> seen;
  std::size_t duplicates = 0;

  auto intern = [&](const std::string& label) {
    auto [it, inserted] = index.emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find_first_of("#%"); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(std::move(tok));
    if (tokens.empty()) continue;
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw DataError("expected 'u v' or 'u v w', got " + std::to_string(tokens.size()) + " fields",
                      line_no);
    }
    if (tokens[0] == tokens[1]) throw DataError("self-loop on node '" + tokens[0] + "'", line_no);
    double weight = 1.0;
    if (tokens.size() == 3) {
      if (!parse_weight(tokens[2], weight)) throw DataError("unparsable weight '" + tokens[2] + "'", line_no);
      if (!(weight > 0.0) || !std::isfinite(weight)) {
        throw DataError("non-positive weight '" + tokens[2] + "'", line_no);
      }
      if (!options.weighted) weight = 1.0;
    }
    const NodeId u = intern(tokens[0]);
    const NodeId v = intern(tokens[1]);
    if (!seen.insert(NodePair::of(u, v).key()).second) {
      ++duplicates;
      continue;
    }
    edges.push_back({u, v, weight});
  }
  return {Graph::from_edges(std::move(labels), edges), duplicates};
}

LoadedGraph load_edge_list(std::string_view text, const EdgeListOptions& options) {
  std::istringstream in{std::string(text)};
  return load_edge_list(in, options);
}

LoadedGraph load_edge_list_file(const std::string& path, const EdgeListOptions& options) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  return load_edge_list(in, options);
}

void write_edge_list(const Graph& graph, std::ostream& out, bool with_weights) {
  for (const auto& e : graph.edges()) {
    out << graph.label(e.u) << ' ' << graph.label(e.v);
    if (with_weights) out << ' ' << e.weight;
    out << '\n';
  }
}

std::string graph_checksum(const Graph& graph) {
  // Edge lines keyed by label, so that file order and id assignment do not
  // matter.
  std::vector<std::string> lines;
  lines.reserve(graph.edge_count());
  for (const auto& e : graph.edges()) {
    const auto& a = graph.label(e.u);
    const auto& b = graph.label(e.v);
    std::ostringstream line;
    line << std::min(a, b) << ' ' << std::max(a, b);
    if (!graph.is_unweighted()) line << ' ' << e.weight;
    lines.push_back(line.str());
  }
  std::sort(lines.begin(), lines.end());
  std::string canonical = std::to_string(graph.node_count()) + '\n';
  for (const auto& l : lines) canonical += l + '\n';
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, hash >>= 4) out[static_cast<std::size_t>(i)] = kHex[hash & 0xf];
  return out;
}

std::vector<NodePair> nonadjacent_pairs(const Graph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<NodePair> out;
  out.reserve(n * (n - (n > 0 ? 1 : 0)) / 2 - graph.edge_count());
  for_each_nonadjacent_pair(graph, [&](NodePair p) { out.push_back(p); });
  return out;
}

std::vector<double> shortest_path_distances(const Graph& graph, NodeId source) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(graph.node_count(), inf);
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist.at(source) = 0.0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[u]) continue;
    for (const auto& nb : graph.neighbors(u)) {
      const double alt = d + nb.weight;
      if (alt < dist[nb.node]) {
        dist[nb.node] = alt;
        queue.emplace(alt, nb.node);
      }
    }
  }
  return dist;
}

}  // namespace linkpred

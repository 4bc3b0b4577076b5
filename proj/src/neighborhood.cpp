#include "linkpred/neighborhood.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>

#include "linkpred/parallel.hpp"

namespace linkpred {

namespace {

// Reusable workspace for repeated bounded searches on one graph.
class BoundedDijkstra {
 public:
  explicit BoundedDijkstra(const Graph& graph)
      : graph_(graph), dist_(graph.node_count(), std::numeric_limits<double>::infinity()),
        settled_(graph.node_count(), 0) {}

  void run(NodeId source, double radius, std::vector<DistanceEntry>& out) {
    using Item = std::pair<double, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    touched_.clear();
    dist_[source] = 0.0;
    touched_.push_back(source);
    queue.emplace(0.0, source);
    out.clear();
    while (!queue.empty()) {
      auto [d, u] = queue.top();
      queue.pop();
      if (settled_[u]) continue;
      settled_[u] = 1;
      out.push_back({u, d});
      for (const auto& nb : graph_.neighbors(u)) {
        const double alt = d + nb.weight;
        if (alt > radius || settled_[nb.node] || alt >= dist_[nb.node]) continue;
        if (dist_[nb.node] == std::numeric_limits<double>::infinity()) touched_.push_back(nb.node);
        dist_[nb.node] = alt;
        queue.emplace(alt, nb.node);
      }
    }
    for (NodeId v : touched_) {
      dist_[v] = std::numeric_limits<double>::infinity();
      settled_[v] = 0;
    }
    std::sort(out.begin(), out.end(), [](const DistanceEntry& a, const DistanceEntry& b) {
      return a.distance != b.distance ? a.distance > b.distance : a.node > b.node;
    });
  }

 private:
  const Graph& graph_;
  std::vector<double> dist_;
  std::vector<char> settled_;
  std::vector<NodeId> touched_;
};

void check_radius(double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
}

}  // namespace

BoundedDistanceList bounded_sssp(const Graph& graph, NodeId source, double radius) {
  check_radius(radius);
  if (source >= graph.node_count()) throw std::out_of_range("bounded_sssp: source out of range");
  BoundedDistanceList list{source, radius, {}};
  BoundedDijkstra(graph).run(source, radius, list.entries);
  return list;
}

NeighborhoodTable NeighborhoodTable::build(const Graph& graph, double radius, unsigned threads) {
  check_radius(radius);
  const std::size_t n = graph.node_count();
  std::vector<std::vector<DistanceEntry>> lists(n);
  parallel_chunks(n, threads, [&](unsigned, std::size_t begin, std::size_t end) {
    BoundedDijkstra search(graph);
    for (std::size_t u = begin; u < end; ++u) search.run(static_cast<NodeId>(u), radius, lists[u]);
  });

  NeighborhoodTable table;
  table.radius_ = radius;
  table.node_count_ = n;
  table.entry_offsets_.reserve(n + 1);
  table.level_offsets_.reserve(n + 1);
  for (std::size_t u = 0; u < n; ++u) {
    const auto& list = lists[u];
    // Walk from the far end; the count of entries strictly closer than a
    // level is the list size minus everything at or beyond it.
    const auto size = static_cast<std::uint32_t>(list.size());
    std::uint32_t beyond = 0;
    std::size_t i = 0;
    while (i < list.size()) {
      std::size_t j = i;
      while (j < list.size() && list[j].distance == list[i].distance) {
        table.entry_level_.push_back(
            static_cast<std::uint32_t>(table.levels_.size() - table.level_offsets_.back()));
        ++j;
      }
      const auto here = static_cast<std::uint32_t>(j - i);
      table.levels_.push_back({list[i].distance, size - beyond, size - beyond - here});
      beyond += here;
      i = j;
    }
    table.entries_.insert(table.entries_.end(), list.begin(), list.end());
    table.entry_offsets_.push_back(table.entries_.size());
    table.level_offsets_.push_back(table.levels_.size());
  }
  return table;
}

BoundedDistanceList NeighborhoodTable::distance_list(NodeId u) const {
  auto entries = list(u);
  return {u, radius_, {entries.begin(), entries.end()}};
}

std::size_t NeighborhoodTable::nod_leq(NodeId u, double d) const {
  for (const auto& level : levels(u)) {
    if (level.distance <= d) return level.leq;
  }
  return 0;
}

std::size_t NeighborhoodTable::nod_lt(NodeId u, double d) const {
  for (const auto& level : levels(u)) {
    if (level.distance < d) return level.leq;
  }
  return 0;
}

double NeighborhoodTable::mean_ball_size() const noexcept {
  if (node_count_ == 0) return 0.0;
  return static_cast<double>(entries_.size()) / static_cast<double>(node_count_);
}

}  // namespace linkpred

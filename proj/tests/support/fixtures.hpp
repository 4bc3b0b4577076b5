#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linkpred/graph.hpp"

namespace linkpred::testing {

inline Graph labelled(std::vector<std::string> labels, std::vector<std::pair<int, int>> edges) {
  std::vector<WeightedEdge> list;
  for (auto [u, v] : edges) list.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), 1.0});
  return Graph::from_edges(std::move(labels), list);
}

// a - b - c
inline Graph path3() { return labelled({"a", "b", "c"}, {{0, 1}, {1, 2}}); }

// centre c = 0, leaves l1 l2 l3 = 1 2 3
inline Graph star3() { return labelled({"c", "l1", "l2", "l3"}, {{0, 1}, {0, 2}, {0, 3}}); }

inline Graph triangle() { return labelled({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}); }

inline Graph clique(std::size_t n) {
  std::vector<WeightedEdge> list;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) list.push_back({u, v, 1.0});
  }
  return Graph::from_edges(n, list);
}

inline Graph path(std::size_t n) {
  std::vector<WeightedEdge> list;
  for (NodeId u = 0; u + 1 < n; ++u) list.push_back({u, u + 1, 1.0});
  return Graph::from_edges(n, list);
}

}  // namespace linkpred::testing

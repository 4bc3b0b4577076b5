#include "linkpred/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace linkpred {

Graph generate_pa(std::size_t node_count, std::size_t initial_clique, std::size_t edges_per_node,
                  const RandomSeed& seed) {
  if (edges_per_node < 1 || edges_per_node > initial_clique || initial_clique > node_count) {
    throw std::invalid_argument("generate_pa: require 1 <= m <= m0 <= n");
  }
  Rng rng = make_rng(seed);
  std::vector<WeightedEdge> edges;
  edges.reserve(initial_clique * (initial_clique - 1) / 2 + (node_count - initial_clique) * edges_per_node);

  // Every edge endpoint appears once, so a uniform draw from this list picks a
  // node with probability proportional to its degree.
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * edges.capacity());
  for (NodeId u = 0; u < initial_clique; ++u) {
    for (NodeId v = u + 1; v < initial_clique; ++v) {
      edges.push_back({u, v, 1.0});
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }

  std::vector<NodeId> targets;
  for (auto node = static_cast<NodeId>(initial_clique); node < node_count; ++node) {
    targets.clear();
    while (targets.size() < edges_per_node) {
      // A single-node seed clique has no edges yet; fall back to uniform.
      const NodeId candidate = endpoints.empty()
                                   ? static_cast<NodeId>(uniform_index(rng, node))
                                   : endpoints[uniform_index(rng, endpoints.size())];
      if (std::find(targets.begin(), targets.end(), candidate) == targets.end()) {
        targets.push_back(candidate);
      }
    }
    for (NodeId t : targets) {
      edges.push_back({t, node, 1.0});
      endpoints.push_back(t);
      endpoints.push_back(node);
    }
  }
  return Graph::from_edges(node_count, edges);
}

}  // namespace linkpred

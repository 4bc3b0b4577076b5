#pragma once

#include <vector>

#include "linkpred/graph.hpp"
#include "linkpred/random.hpp"

namespace linkpred {

struct EdgeRemoval {
  Graph observed;
  std::vector<NodePair> missing;  // ascending
};

// Removes round(fraction * |E|) undirected edges chosen uniformly without
// replacement. The node set is kept; no connectivity repair is attempted.
EdgeRemoval remove_random_edges(const Graph& graph, double fraction, const RandomSeed& seed);

}  // namespace linkpred

#pragma once

#include <cstddef>

#include "linkpred/graph.hpp"
#include "linkpred/random.hpp"

namespace linkpred {

// Preferential attachment growth: a clique on `initial_clique` nodes, then
// every new node links to `edges_per_node` distinct existing nodes drawn with
// probability proportional to their current degree. Requires
// 1 <= edges_per_node <= initial_clique <= node_count.
Graph generate_pa(std::size_t node_count, std::size_t initial_clique, std::size_t edges_per_node,
                  const RandomSeed& seed);

}  // namespace linkpred

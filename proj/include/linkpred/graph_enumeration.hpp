#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "linkpred/graph.hpp"

namespace linkpred {

// Adjacency of a graph on at most 16 nodes as one bit row per node.
using AdjacencyRows = std::vector<std::uint16_t>;

// Canonical form of a small simple graph: equal for isomorphic graphs,
// different otherwise.
std::vector<std::uint16_t> canonical_form(const AdjacencyRows& rows);

// Every connected simple graph on exactly n nodes, one per isomorphism
// class (1, 1, 2, 6, 21, 112, 853, 11117 for n = 1..8). Limited to n <= 9.
std::vector<AdjacencyRows> connected_graphs(std::size_t n);

Graph to_graph(const AdjacencyRows& rows);

}  // namespace linkpred

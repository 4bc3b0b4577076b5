#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "linkpred/graph.hpp"
#include "linkpred/interaction_index.hpp"
#include "linkpred/neighborhood.hpp"
#include "linkpred/pair_scores.hpp"

namespace linkpred {

// Shapley interaction index of the k-degree game, k = table.radius(). This is
// the closeness kernel run with the indicator f, nothing more.
PairScores shapley_k_degree_scores(const NeighborhoodTable& table, const KernelOptions& options = {});

// Which nodes count as k-neighbours of v: dist < k, or dist <= k.
enum class CnMode { inclusive, strict };

std::string_view to_string(CnMode mode) noexcept;
std::optional<CnMode> parse_cn_mode(std::string_view name);

// |E^k(u) ∩ E^k(v)| for every pair sharing at least one k-neighbour,
// adjacent pairs included. Requires table.radius() >= k.
PairScores common_neighbors_scores(const NeighborhoodTable& table, double k, CnMode mode = CnMode::inclusive);

// Distribution of a uniform random walk from `source` after `step` moves.
// Weights are ignored. A walk from an isolated node is all zero.
struct WalkProfile {
  NodeId source = 0;
  std::size_t step = 0;
  std::vector<double> probabilities;
};

WalkProfile walk_profile(const Graph& graph, NodeId source, std::size_t steps);

// One uniform transition applied to `profile` in place.
void advance_walk(const Graph& graph, WalkProfile& profile);

// deg(u)/2|E| * P_uv(k) + deg(v)/2|E| * P_vu(k), over non-adjacent pairs;
// only nonzero scores are stored.
PairScores lrw_scores(const Graph& graph, std::size_t k, unsigned threads = 1);

// sum of the LRW scores over steps 0..k.
PairScores srw_scores(const Graph& graph, std::size_t k, unsigned threads = 1);

}  // namespace linkpred

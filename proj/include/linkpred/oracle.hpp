#pragma once

// Exponential-time reference implementations of the cooperative-game
// definitions. They exist to check the counting kernels on small graphs.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "linkpred/distance_function.hpp"
#include "linkpred/graph.hpp"
#include "linkpred/semivalue.hpp"

namespace linkpred {

// A coalition of nodes as a bit mask (bit i <=> node i).
using Coalition = std::uint64_t;
using CoalitionGame = std::function<double(Coalition)>;

// Enumeration guard for the brute-force interaction indices.
struct OracleLimits {
  std::size_t max_nodes = 9;
};

// Generalised group closeness: sum over v outside S of f(dist(S, v)).
// Unreachable nodes contribute 0; the empty group is worth 0.
double group_closeness(const Graph& graph, std::span<const NodeId> group, const DistanceFunction& f);

// Mask-based games over a graph with at most 63 nodes. Distances are
// computed once, when the game is created.
CoalitionGame closeness_game(const Graph& graph, const DistanceFunction& f);
// |{v outside S : dist(S, v) <= k}|
CoalitionGame k_degree_game(const Graph& graph, double k);

// Every coalition's value, indexed by mask, for games on n <= 24 players.
class TabulatedGame {
 public:
  TabulatedGame(const CoalitionGame& game, std::size_t players);
  double operator()(Coalition c) const { return values_[c]; }
  std::size_t players() const noexcept { return players_; }

 private:
  std::size_t players_;
  std::vector<double> values_;
};

// nu(C + {i, j}) - nu(C + {i}) - nu(C + {j}) + nu(C). Throws unless
// i != j and neither belongs to C.
double synergy(const CoalitionGame& game, Coalition coalition, NodeId i, NodeId j);

// Average synergy over all (n-1)! orderings of the players with s and t
// merged into one, taking the coalition that precedes the merged player.
double brute_force_shapley_interaction(const Graph& graph, const CoalitionGame& game, NodeId s, NodeId t,
                                       const OracleLimits& limits = {});
double brute_force_shapley_interaction(const TabulatedGame& game, NodeId s, NodeId t,
                                       const OracleLimits& limits = {});

// sum over sizes c and coalitions C of V \ {s, t} with |C| = c of
// beta(c) * S(C, s, t) / C(n-2, c).
double brute_force_semivalue_interaction(const Graph& graph, const CoalitionGame& game, NodeId s, NodeId t,
                                         const SemivalueWeights& weights, const OracleLimits& limits = {});
double brute_force_semivalue_interaction(const TabulatedGame& game, NodeId s, NodeId t,
                                         const SemivalueWeights& weights, const OracleLimits& limits = {});

}  // namespace linkpred

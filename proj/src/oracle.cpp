#include "linkpred/oracle.hpp"

#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <queue>
#include <stdexcept>

namespace linkpred {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Coalition bit(NodeId v) { return Coalition{1} << v; }

void check_pair(std::size_t n, NodeId s, NodeId t, const OracleLimits& limits) {
  if (n > limits.max_nodes) {
    throw std::invalid_argument("brute-force interaction index: " + std::to_string(n) +
                                " players exceed the enumeration bound of " +
                                std::to_string(limits.max_nodes));
  }
  if (s >= n || t >= n || s == t) throw std::invalid_argument("brute-force interaction index: bad pair");
}

double factorial(std::size_t k) {
  double f = 1.0;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
  return f;
}

std::vector<std::vector<double>> all_pairs_distances(const Graph& graph) {
  if (graph.node_count() > 63) throw std::invalid_argument("coalition games support at most 63 nodes");
  std::vector<std::vector<double>> dist;
  dist.reserve(graph.node_count());
  for (NodeId s = 0; s < graph.node_count(); ++s) dist.push_back(shortest_path_distances(graph, s));
  return dist;
}

double tabulated_synergy(const TabulatedGame& game, Coalition c, NodeId i, NodeId j) {
  return game(c | bit(i) | bit(j)) - game(c | bit(i)) - game(c | bit(j)) + game(c);
}

}  // namespace

double group_closeness(const Graph& graph, std::span<const NodeId> group, const DistanceFunction& f) {
  const std::size_t n = graph.node_count();
  std::vector<double> dist(n, kInf);
  std::vector<char> member(n, 0);
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (NodeId s : group) {
    if (s >= n) throw std::out_of_range("group_closeness: node out of range");
    member[s] = 1;
    dist[s] = 0.0;
    queue.emplace(0.0, s);
  }
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[u]) continue;
    for (const auto& nb : graph.neighbors(u)) {
      if (d + nb.weight < dist[nb.node]) {
        dist[nb.node] = d + nb.weight;
        queue.emplace(dist[nb.node], nb.node);
      }
    }
  }
  double value = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    if (!member[v]) value += f(dist[v]);
  }
  return value;
}

CoalitionGame closeness_game(const Graph& graph, const DistanceFunction& f) {
  auto dist = std::make_shared<const std::vector<std::vector<double>>>(all_pairs_distances(graph));
  const std::size_t n = graph.node_count();
  return [dist, f, n](Coalition c) {
    double value = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      if (c & bit(v)) continue;
      double best = kInf;
      for (Coalition rest = c; rest != 0; rest &= rest - 1) {
        best = std::min(best, (*dist)[static_cast<std::size_t>(std::countr_zero(rest))][v]);
      }
      value += f(best);
    }
    return value;
  };
}

CoalitionGame k_degree_game(const Graph& graph, double k) {
  auto dist = std::make_shared<const std::vector<std::vector<double>>>(all_pairs_distances(graph));
  const std::size_t n = graph.node_count();
  return [dist, k, n](Coalition c) {
    double value = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      if (c & bit(v)) continue;
      for (Coalition rest = c; rest != 0; rest &= rest - 1) {
        if ((*dist)[static_cast<std::size_t>(std::countr_zero(rest))][v] <= k) {
          value += 1.0;
          break;
        }
      }
    }
    return value;
  };
}

TabulatedGame::TabulatedGame(const CoalitionGame& game, std::size_t players) : players_(players) {
  if (players > 24) throw std::invalid_argument("TabulatedGame: too many players");
  values_.resize(std::size_t{1} << players);
  for (Coalition c = 0; c < values_.size(); ++c) values_[c] = c == 0 ? 0.0 : game(c);
}

double synergy(const CoalitionGame& game, Coalition coalition, NodeId i, NodeId j) {
  if (i == j || i >= 64 || j >= 64) throw std::invalid_argument("synergy: need two distinct players");
  if (coalition & (bit(i) | bit(j))) throw std::invalid_argument("synergy: player already in coalition");
  auto nu = [&](Coalition c) { return c == 0 ? 0.0 : game(c); };
  return nu(coalition | bit(i) | bit(j)) - nu(coalition | bit(i)) - nu(coalition | bit(j)) + nu(coalition);
}

double brute_force_shapley_interaction(const TabulatedGame& game, NodeId s, NodeId t,
                                       const OracleLimits& limits) {
  const std::size_t n = game.players();
  check_pair(n, s, t, limits);
  std::vector<NodeId> singles;
  for (NodeId v = 0; v < n; ++v) {
    if (v != s && v != t) singles.push_back(v);
  }
  const std::size_t m = singles.size();  // n - 2
  std::vector<double> tail_orders(m + 1);
  for (std::size_t c = 0; c <= m; ++c) tail_orders[c] = factorial(m - c);

  // Orderings are enumerated position by position. Once the merged player
  // is placed, all (m - c)! arrangements of the remaining players share the
  // same predecessor set, so they are counted at once.
  double total = 0.0;
  double orderings = 0.0;
  auto extend = [&](auto& self, Coalition used, std::size_t placed) -> void {
    const double weight = tail_orders[placed];
    total += weight * tabulated_synergy(game, used, s, t);
    orderings += weight;
    for (NodeId v : singles) {
      if (!(used & bit(v))) self(self, used | bit(v), placed + 1);
    }
  };
  extend(extend, Coalition{0}, std::size_t{0});
  const double expected = factorial(n - 1);
  if (orderings != expected) throw std::logic_error("permutation enumeration lost orderings");
  return total / expected;
}

double brute_force_shapley_interaction(const Graph& graph, const CoalitionGame& game, NodeId s, NodeId t,
                                       const OracleLimits& limits) {
  check_pair(graph.node_count(), s, t, limits);
  return brute_force_shapley_interaction(TabulatedGame(game, graph.node_count()), s, t, limits);
}

double brute_force_semivalue_interaction(const TabulatedGame& game, NodeId s, NodeId t,
                                         const SemivalueWeights& weights, const OracleLimits& limits) {
  const std::size_t n = game.players();
  check_pair(n, s, t, limits);
  weights.validate();
  if (weights.player_count != n) throw std::invalid_argument("semivalue weights sized for another game");
  std::vector<NodeId> singles;
  for (NodeId v = 0; v < n; ++v) {
    if (v != s && v != t) singles.push_back(v);
  }
  const std::size_t m = singles.size();
  std::vector<double> binom(m + 1, 1.0);
  for (std::size_t c = 1; c <= m; ++c) binom[c] = binom[c - 1] * static_cast<double>(m - c + 1) / static_cast<double>(c);

  double total = 0.0;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    Coalition coalition = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (pick & (std::uint64_t{1} << i)) coalition |= bit(singles[i]);
    }
    const auto size = static_cast<std::size_t>(std::popcount(pick));
    total += weights.beta[size] * tabulated_synergy(game, coalition, s, t) / binom[size];
  }
  return total;
}

double brute_force_semivalue_interaction(const Graph& graph, const CoalitionGame& game, NodeId s, NodeId t,
                                         const SemivalueWeights& weights, const OracleLimits& limits) {
  check_pair(graph.node_count(), s, t, limits);
  return brute_force_semivalue_interaction(TabulatedGame(game, graph.node_count()), s, t, weights, limits);
}

}  // namespace linkpred

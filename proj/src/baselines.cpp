#include "linkpred/baselines.hpp"

#include <stdexcept>

#include "linkpred/distance_function.hpp"
#include "linkpred/parallel.hpp"

namespace linkpred {

PairScores shapley_k_degree_scores(const NeighborhoodTable& table, const KernelOptions& options) {
  return shapley_closeness_all_pairs(table, DistanceFunction{DistanceKind::indicator, table.radius()}, options);
}

std::string_view to_string(CnMode mode) noexcept {
  return mode == CnMode::inclusive ? "inclusive" : "strict";
}

std::optional<CnMode> parse_cn_mode(std::string_view name) {
  if (name == "inclusive") return CnMode::inclusive;
  if (name == "strict") return CnMode::strict;
  return std::nullopt;
}

PairScores common_neighbors_scores(const NeighborhoodTable& table, double k, CnMode mode) {
  if (!(k > 0.0) || k > table.radius()) {
    throw std::invalid_argument("common neighbours: k must lie in (0, table radius]");
  }
  const std::size_t n = table.node_count();
  PairScoreAccumulator acc(n);
  std::vector<NodeId> ball;
  for (NodeId w = 0; w < n; ++w) {
    ball.clear();
    for (const auto& e : table.list(w)) {
      if (e.node == w) continue;
      if (mode == CnMode::inclusive ? e.distance <= k : e.distance < k) ball.push_back(e.node);
    }
    for (std::size_t i = 0; i < ball.size(); ++i) {
      for (std::size_t j = i + 1; j < ball.size(); ++j) acc.add(ball[i], ball[j], 1.0);
    }
  }
  return acc.finish();
}

void advance_walk(const Graph& graph, WalkProfile& profile) {
  std::vector<double> next(graph.node_count(), 0.0);
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    const double mass = profile.probabilities[v];
    if (mass == 0.0) continue;
    const auto adjacent = graph.neighbors(v);
    const double share = mass / static_cast<double>(adjacent.size());
    for (const auto& nb : adjacent) next[nb.node] += share;
  }
  profile.probabilities = std::move(next);
  ++profile.step;
}

WalkProfile walk_profile(const Graph& graph, NodeId source, std::size_t steps) {
  if (source >= graph.node_count()) throw std::out_of_range("walk_profile: source out of range");
  WalkProfile profile{source, 0, std::vector<double>(graph.node_count(), 0.0)};
  if (graph.degree(source) == 0) {
    profile.step = steps;
    return profile;
  }
  profile.probabilities[source] = 1.0;
  for (std::size_t t = 0; t < steps; ++t) advance_walk(graph, profile);
  return profile;
}

namespace {

// rows[u][v] = sum over the requested steps of P_uv(t).
PairScores walk_scores(const Graph& graph, std::size_t k, bool superposed, unsigned threads) {
  const std::size_t n = graph.node_count();
  const std::size_t m = graph.edge_count();
  if (m == 0) return PairScores(n, {});
  std::vector<std::vector<double>> rows(n);
  parallel_chunks(n, threads, [&](unsigned, std::size_t begin, std::size_t end) {
    for (std::size_t u = begin; u < end; ++u) {
      auto profile = walk_profile(graph, static_cast<NodeId>(u), 0);
      std::vector<double> sum(n, 0.0);
      if (graph.degree(static_cast<NodeId>(u)) > 0) {
        if (superposed) sum = profile.probabilities;
        for (std::size_t t = 1; t <= k; ++t) {
          advance_walk(graph, profile);
          if (superposed) {
            for (std::size_t v = 0; v < n; ++v) sum[v] += profile.probabilities[v];
          }
        }
        if (!superposed) sum = std::move(profile.probabilities);
      }
      rows[u] = std::move(sum);
    }
  });

  const double two_m = 2.0 * static_cast<double>(m);
  std::vector<ScoredPair> entries;
  for_each_nonadjacent_pair(graph, [&](NodePair p) {
    const double score = static_cast<double>(graph.degree(p.u)) / two_m * rows[p.u][p.v] +
                         static_cast<double>(graph.degree(p.v)) / two_m * rows[p.v][p.u];
    if (score != 0.0) entries.push_back({p, score});
  });
  return PairScores(n, std::move(entries));
}

}  // namespace

PairScores lrw_scores(const Graph& graph, std::size_t k, unsigned threads) {
  return walk_scores(graph, k, false, threads);
}

PairScores srw_scores(const Graph& graph, std::size_t k, unsigned threads) {
  return walk_scores(graph, k, true, threads);
}

}  // namespace linkpred

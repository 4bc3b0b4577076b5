#include "linkpred/interaction_index.hpp"

#include <cassert>
#include <stdexcept>

#include "linkpred/parallel.hpp"

namespace linkpred {

namespace {

void check_radius(const NeighborhoodTable& table, const DistanceFunction& f) {
  if (table.radius() != f.radius) {
    throw std::invalid_argument("neighbourhood table radius " + std::to_string(table.radius()) +
                                " does not match the distance function radius " + std::to_string(f.radius));
  }
}

// Shared scan. avoid(N) is the weighted share of predecessor coalitions
// drawn entirely from a fixed group of N of the n-2 other players.
// N = Nod_gt(u, d) gives the MC+ factor, N = Nod_geq(u, d) the MC- one.
//
// For node u and its levels in descending distance order:
//   term(j) = f(d_j) * (avoid(n - lt_j) - avoid(n - leq_j))
//   tail(j) = sum of term(i), i < j
//   base(j) = tail(j) - f(d_j) * avoid(n - leq_j)
// and every pair of list entries whose farther member sits at level j
// receives base(j) in the interaction index.
template <class Avoid>
PairScores scan_all_pairs(const NeighborhoodTable& table, const DistanceFunction& f, unsigned threads,
                          Avoid&& avoid) {
  const std::size_t n = table.node_count();
  const unsigned workers = std::max(1u, threads);
  std::vector<PairScoreAccumulator> partial;
  partial.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) partial.emplace_back(n);

  parallel_chunks(n, workers, [&](unsigned worker, std::size_t begin, std::size_t end) {
    auto& acc = partial[worker];
    std::vector<double> base;
    for (std::size_t uu = begin; uu < end; ++uu) {
      const auto u = static_cast<NodeId>(uu);
      const auto levels = table.levels(u);
      const auto entries = table.list(u);
      const auto entry_level = table.entry_levels(u);
      if (entries.size() < 2) continue;

      base.assign(levels.size(), 0.0);
      double tail = 0.0;
      for (std::size_t j = 0; j < levels.size(); ++j) {
        const auto& level = levels[j];
        if (level.distance == 0.0) break;  // only u itself
        assert(level.leq >= 2);
        const double fd = f(level.distance);
        const double gt = avoid(n - level.leq);
        base[j] = tail - fd * gt;
        if (level.lt >= 2) tail += fd * (avoid(n - level.lt) - gt);
      }
      for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
        const double score = -base[entry_level[i]];
        for (std::size_t j = i + 1; j < entries.size(); ++j) acc.add(entries[i].node, entries[j].node, score);
      }
    }
  });

  for (unsigned w = 1; w < workers; ++w) partial[0].merge(partial[w]);
  return partial[0].finish();
}

}  // namespace

std::vector<double> coalition_avoidance_weights(const SemivalueWeights& weights) {
  weights.validate();
  const std::size_t m = weights.player_count - 2;
  std::vector<double> out(m + 1, 0.0);
  for (std::size_t big_n = 0; big_n <= m; ++big_n) {
    double ratio = 1.0;  // C(N, c) / C(m, c)
    double sum = 0.0;
    for (std::size_t c = 0; c <= big_n; ++c) {
      if (c > 0) ratio *= static_cast<double>(big_n - c + 1) / static_cast<double>(m - c + 1);
      sum += weights.beta[c] * ratio;
    }
    out[big_n] = sum;
  }
  return out;
}

PairScores shapley_closeness_all_pairs(const NeighborhoodTable& table, const DistanceFunction& f,
                                       const KernelOptions& options) {
  check_radius(table, f);
  const double n = static_cast<double>(table.node_count());
  // A uniformly random ordering of the merged game puts the pair ahead of
  // the n-2-N other nodes with probability 1 / (n-1-N).
  return scan_all_pairs(table, f, options.threads,
                        [n](std::size_t big_n) { return 1.0 / (n - 1.0 - static_cast<double>(big_n)); });
}

PairScores semivalue_closeness_all_pairs(const NeighborhoodTable& table, const DistanceFunction& f,
                                         const SemivalueWeights& weights, const KernelOptions& options) {
  check_radius(table, f);
  weights.validate();
  if (weights.player_count != table.node_count()) {
    throw std::invalid_argument("semivalue weights sized for " + std::to_string(weights.player_count) +
                                " players, graph has " + std::to_string(table.node_count()));
  }
  const auto avoid = coalition_avoidance_weights(weights);
  return scan_all_pairs(table, f, options.threads, [&avoid](std::size_t big_n) { return avoid.at(big_n); });
}

}  // namespace linkpred

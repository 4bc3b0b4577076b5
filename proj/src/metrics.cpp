#include "linkpred/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace linkpred {

Ranking rank_candidates(const PairScores& scores, std::span<const NodePair> candidates) {
  Ranking ranking;
  ranking.order.reserve(candidates.size());
  for (const auto& c : candidates) ranking.order.push_back({NodePair::of(c.u, c.v), scores.score(c)});
  std::sort(ranking.order.begin(), ranking.order.end(), [](const ScoredPair& a, const ScoredPair& b) {
    return a.score != b.score ? a.score > b.score : a.pair < b.pair;
  });
  for (std::size_t i = 0; i < ranking.order.size(); ++i) {
    if (i > 0 && ranking.order[i].pair == ranking.order[i - 1].pair) {
      throw std::invalid_argument("rank_candidates: duplicate candidate pair");
    }
    if (i == 0 || ranking.order[i].score != ranking.order[i - 1].score) ranking.group_begin.push_back(i);
  }
  ranking.group_begin.push_back(ranking.order.size());
  return ranking;
}

std::vector<std::size_t> missing_per_group(const Ranking& ranking, std::span<const NodePair> missing) {
  std::vector<NodePair> sorted;
  sorted.reserve(missing.size());
  for (const auto& p : missing) sorted.push_back(NodePair::of(p.u, p.v));
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("missing edge listed twice");
  }
  std::vector<std::size_t> counts(ranking.group_count(), 0);
  std::size_t found = 0;
  for (std::size_t g = 0; g < ranking.group_count(); ++g) {
    for (std::size_t i = ranking.group_begin[g]; i < ranking.group_begin[g + 1]; ++i) {
      if (std::binary_search(sorted.begin(), sorted.end(), ranking.order[i].pair)) {
        ++counts[g];
        ++found;
      }
    }
  }
  if (found != sorted.size()) throw std::invalid_argument("missing edges must be candidates");
  return counts;
}

std::uint64_t twice_mann_whitney_u(const Ranking& ranking, std::span<const std::size_t> missing_per_group) {
  // Ascending ranks: the group at descending positions [a, b) of N holds
  // ranks N-b+1 .. N-a, whose midrank doubled is 2N - a - b + 1.
  const std::uint64_t total = ranking.order.size();
  std::uint64_t twice_rank_sum = 0;
  std::uint64_t m = 0;
  for (std::size_t g = 0; g < ranking.group_count(); ++g) {
    const std::uint64_t a = ranking.group_begin[g];
    const std::uint64_t b = ranking.group_begin[g + 1];
    twice_rank_sum += missing_per_group[g] * (2 * total - a - b + 1);
    m += missing_per_group[g];
  }
  return twice_rank_sum - m * (m + 1);
}

double auc(const Ranking& ranking, std::span<const NodePair> missing) {
  const auto counts = missing_per_group(ranking, missing);
  const std::uint64_t m = missing.size();
  const std::uint64_t rest = ranking.order.size() - m;
  if (m == 0 || rest == 0) throw std::invalid_argument("auc: both missing and non-existent edges required");
  return static_cast<double>(twice_mann_whitney_u(ranking, counts)) /
         (2.0 * static_cast<double>(m) * static_cast<double>(rest));
}

double auc(const PairScores& scores, std::span<const NodePair> candidates, std::span<const NodePair> missing) {
  return auc(rank_candidates(scores, candidates), missing);
}

double expected_precision(const Ranking& ranking, std::span<const NodePair> missing, std::size_t p) {
  if (p < 1 || p > ranking.order.size()) throw std::invalid_argument("precision depth out of range");
  const auto counts = missing_per_group(ranking, missing);
  double correct = 0.0;
  std::size_t taken = 0;
  for (std::size_t g = 0; g < ranking.group_count() && taken < p; ++g) {
    const std::size_t size = ranking.group_begin[g + 1] - ranking.group_begin[g];
    if (taken + size <= p) {
      correct += static_cast<double>(counts[g]);
      taken += size;
    } else {
      correct += static_cast<double>(p - taken) * static_cast<double>(counts[g]) / static_cast<double>(size);
      taken = p;
    }
  }
  return correct / static_cast<double>(p);
}

double expected_precision(const PairScores& scores, std::span<const NodePair> candidates,
                          std::span<const NodePair> missing, std::size_t p) {
  return expected_precision(rank_candidates(scores, candidates), missing, p);
}

}  // namespace linkpred

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "linkpred/graph.hpp"
#include "linkpred/pair_scores.hpp"

namespace linkpred {

// Candidates in descending score order (ascending pair within equal scores)
// with the boundaries of each group of exactly equal scores.
struct Ranking {
  std::vector<ScoredPair> order;
  std::vector<std::size_t> group_begin;  // plus a final sentinel == order.size()

  std::size_t group_count() const noexcept { return group_begin.empty() ? 0 : group_begin.size() - 1; }
};

// Candidates must be distinct; pairs not stored in `scores` rank with 0.
Ranking rank_candidates(const PairScores& scores, std::span<const NodePair> candidates);

// Per tie group of a ranking, how many of its pairs are missing edges.
// Throws unless `missing` is a duplicate-free subset of the ranked pairs.
std::vector<std::size_t> missing_per_group(const Ranking& ranking, std::span<const NodePair> missing);

// Twice the Mann-Whitney U of the missing class, from midranks in integer
// arithmetic: sum over groups of miss * (first rank + last rank) - m(m+1).
std::uint64_t twice_mann_whitney_u(const Ranking& ranking, std::span<const std::size_t> missing_per_group);

// Probability that a missing edge outranks a non-existent one, ties worth
// one half. Throws if either class is empty.
double auc(const Ranking& ranking, std::span<const NodePair> missing);
double auc(const PairScores& scores, std::span<const NodePair> candidates, std::span<const NodePair> missing);

// Expected share of missing edges among the top p when every tie group is
// ordered uniformly at random. Requires 1 <= p <= |candidates|.
double expected_precision(const Ranking& ranking, std::span<const NodePair> missing, std::size_t p);
double expected_precision(const PairScores& scores, std::span<const NodePair> candidates,
                          std::span<const NodePair> missing, std::size_t p);

}  // namespace linkpred

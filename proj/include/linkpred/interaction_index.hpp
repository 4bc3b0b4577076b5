#pragma once

#include <cstddef>
#include <vector>

#include "linkpred/distance_function.hpp"
#include "linkpred/neighborhood.hpp"
#include "linkpred/pair_scores.hpp"
#include "linkpred/semivalue.hpp"

namespace linkpred {

struct KernelOptions {
  unsigned threads = 1;  // 1 gives bit-stable output
};

// Generalised-closeness Shapley interaction index for every pair that
// co-occurs in some bounded distance list, stored negated (higher = more
// similar). Pairs that never co-occur are absent and score 0. The table and
// f must share the radius.
PairScores shapley_closeness_all_pairs(const NeighborhoodTable& table, const DistanceFunction& f,
                                       const KernelOptions& options = {});

// Same for an arbitrary semivalue; weights.player_count must equal |V|.
PairScores semivalue_closeness_all_pairs(const NeighborhoodTable& table, const DistanceFunction& f,
                                         const SemivalueWeights& weights, const KernelOptions& options = {});

// sum over c of beta(c) * C(N, c) / C(n-2, c) for N = 0 .. n-2: the weighted
// fraction of coalitions that avoid a fixed set of n-2-N players. Binomial
// ratios are formed as running products, never from factorials.
std::vector<double> coalition_avoidance_weights(const SemivalueWeights& weights);

}  // namespace linkpred

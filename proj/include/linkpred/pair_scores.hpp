#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "linkpred/graph.hpp"

namespace linkpred {

struct ScoredPair {
  NodePair pair;
  double score;
};

// Sparse symmetric similarity scores; higher means a more likely edge.
// Pairs that are not stored score 0.
class PairScores {
 public:
  PairScores() = default;
  // Entries need not be sorted; keys must be unique.
  PairScores(std::size_t node_count, std::vector<ScoredPair> entries);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool contains(NodeId a, NodeId b) const noexcept;
  double score(NodeId a, NodeId b) const noexcept;
  double score(NodePair p) const noexcept { return score(p.u, p.v); }

  // Stored entries in ascending pair order.
  std::span<const ScoredPair> entries() const noexcept { return entries_; }

 private:
  std::size_t node_count_ = 0;
  std::vector<ScoredPair> entries_;
};

// Accumulates additive pair contributions. Small graphs use a dense upper
// triangle, large ones a hash map; both remember which pairs were touched
// so that explicitly computed zeros remain materialised.
class PairScoreAccumulator {
 public:
  static constexpr std::size_t kDenseLimit = 3000;

  explicit PairScoreAccumulator(std::size_t node_count);

  void add(NodeId a, NodeId b, double value);
  // Adds everything `other` holds, in ascending pair order.
  void merge(const PairScoreAccumulator& other);
  PairScores finish() const;

 private:
  std::size_t index(NodeId lo, NodeId hi) const noexcept {
    // Row lo holds hi = lo+1 .. n-1.
    return static_cast<std::size_t>(lo) * (2 * node_count_ - lo - 1) / 2 + (hi - lo - 1);
  }

  std::size_t node_count_;
  bool dense_;
  std::vector<double> values_;
  std::vector<char> touched_;
  std::unordered_map<std::uint64_t, double> sparse_;
};

// CSV rows "label_u,label_v,score", sorted by descending score and then by
// ascending label pair. Labels within a row are in node-id order.
void write_pair_scores_csv(const PairScores& scores, const Graph& graph, std::ostream& out);

// Shortest decimal text that round-trips to the same double.
std::string format_score(double value);

}  // namespace linkpred

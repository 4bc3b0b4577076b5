#include "linkpred/pair_scores.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <stdexcept>
#include <string>

namespace linkpred {

PairScores::PairScores(std::size_t node_count, std::vector<ScoredPair> entries)
    : node_count_(node_count), entries_(std::move(entries)) {
  for (auto& e : entries_) e.pair = NodePair::of(e.pair.u, e.pair.v);
  auto by_pair = [](const ScoredPair& a, const ScoredPair& b) { return a.pair < b.pair; };
  if (!std::is_sorted(entries_.begin(), entries_.end(), by_pair)) std::sort(entries_.begin(), entries_.end(), by_pair);
  auto dup = std::adjacent_find(entries_.begin(), entries_.end(),
                                [](const ScoredPair& a, const ScoredPair& b) { return a.pair == b.pair; });
  if (dup != entries_.end()) throw std::invalid_argument("PairScores: duplicate pair");
}

bool PairScores::contains(NodeId a, NodeId b) const noexcept {
  const NodePair key = NodePair::of(a, b);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [](const ScoredPair& e, const NodePair& k) { return e.pair < k; });
  return it != entries_.end() && it->pair == key;
}

double PairScores::score(NodeId a, NodeId b) const noexcept {
  const NodePair key = NodePair::of(a, b);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [](const ScoredPair& e, const NodePair& k) { return e.pair < k; });
  return it != entries_.end() && it->pair == key ? it->score : 0.0;
}

PairScoreAccumulator::PairScoreAccumulator(std::size_t node_count)
    : node_count_(node_count), dense_(node_count <= kDenseLimit) {
  if (dense_) {
    const std::size_t slots = node_count * (node_count - (node_count > 0 ? 1 : 0)) / 2;
    values_.assign(slots, 0.0);
    touched_.assign(slots, 0);
  }
}

void PairScoreAccumulator::add(NodeId a, NodeId b, double value) {
  const NodePair p = NodePair::of(a, b);
  if (dense_) {
    const std::size_t i = index(p.u, p.v);
    values_[i] += value;
    touched_[i] = 1;
  } else {
    sparse_[p.key()] += value;
  }
}

void PairScoreAccumulator::merge(const PairScoreAccumulator& other) {
  if (other.node_count_ != node_count_) throw std::invalid_argument("accumulator size mismatch");
  const PairScores held = other.finish();
  for (const auto& e : held.entries()) add(e.pair.u, e.pair.v, e.score);
}

PairScores PairScoreAccumulator::finish() const {
  std::vector<ScoredPair> entries;
  if (dense_) {
    // Row-major slots are already in ascending pair order.
    std::size_t i = 0;
    for (NodeId lo = 0; lo < node_count_; ++lo) {
      for (NodeId hi = lo + 1; hi < node_count_; ++hi, ++i) {
        if (touched_[i]) entries.push_back({{lo, hi}, values_[i]});
      }
    }
  } else {
    entries.reserve(sparse_.size());
    for (const auto& [key, value] : sparse_) entries.push_back({NodePair::from_key(key), value});
  }
  return PairScores(node_count_, std::move(entries));
}

std::string format_score(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc()) return std::to_string(value);
  return std::string(buffer, ptr);
}

void write_pair_scores_csv(const PairScores& scores, const Graph& graph, std::ostream& out) {
  std::vector<ScoredPair> rows(scores.entries().begin(), scores.entries().end());
  std::sort(rows.begin(), rows.end(), [&](const ScoredPair& a, const ScoredPair& b) {
    if (a.score != b.score) return a.score > b.score;
    const auto& al = graph.label(a.pair.u);
    const auto& bl = graph.label(b.pair.u);
    if (al != bl) return al < bl;
    return graph.label(a.pair.v) < graph.label(b.pair.v);
  });
  for (const auto& r : rows) {
    out << graph.label(r.pair.u) << ',' << graph.label(r.pair.v) << ',' << format_score(r.score) << '\n';
  }
}

}  // namespace linkpred

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "linkpred/graph.hpp"

namespace linkpred {

struct DistanceEntry {
  NodeId node;
  double distance;
};

// Every node within `radius` of `source` (the source itself included at
// distance 0), sorted by distance descending; ties by descending node id.
struct BoundedDistanceList {
  NodeId source = 0;
  double radius = 0.0;
  std::vector<DistanceEntry> entries;
};

// Dijkstra restricted to the ball of the given radius: a node is never
// enqueued with a tentative distance above the radius. Queue order is
// (distance, node id).
BoundedDistanceList bounded_sssp(const Graph& graph, NodeId source, double radius);

// One group of list entries sharing a distance, with the cumulative counts
// of the source's ball at that distance.
struct DistanceLevel {
  double distance;
  std::uint32_t leq;  // entries with distance <= this distance
  std::uint32_t lt;   // entries with distance <  this distance
};

// Bounded distance lists for every node plus the cumulative Nod counts used
// by the interaction-index kernels. Immutable once built.
class NeighborhoodTable {
 public:
  // Lists are computed independently per source; `threads` only changes
  // wall time, never the content.
  static NeighborhoodTable build(const Graph& graph, double radius, unsigned threads = 1);

  double radius() const noexcept { return radius_; }
  std::size_t node_count() const noexcept { return node_count_; }

  std::span<const DistanceEntry> list(NodeId u) const noexcept {
    return {entries_.data() + entry_offsets_[u], entries_.data() + entry_offsets_[u + 1]};
  }
  // Levels in descending distance order; the last one is the source at 0.
  std::span<const DistanceLevel> levels(NodeId u) const noexcept {
    return {levels_.data() + level_offsets_[u], levels_.data() + level_offsets_[u + 1]};
  }
  // Index into levels(u) for each entry of list(u).
  std::span<const std::uint32_t> entry_levels(NodeId u) const noexcept {
    return {entry_level_.data() + entry_offsets_[u], entry_level_.data() + entry_offsets_[u + 1]};
  }

  BoundedDistanceList distance_list(NodeId u) const;

  // Nod counts relative to u. Valid for any d <= radius(); nodes outside
  // the ball count as farther than every such d.
  std::size_t nod_leq(NodeId u, double d) const;
  std::size_t nod_lt(NodeId u, double d) const;
  std::size_t nod_gt(NodeId u, double d) const { return node_count_ - nod_leq(u, d); }
  std::size_t nod_geq(NodeId u, double d) const { return node_count_ - nod_lt(u, d); }

  // Average ball size over all nodes, source included.
  double mean_ball_size() const noexcept;

 private:
  double radius_ = 0.0;
  std::size_t node_count_ = 0;
  std::vector<std::size_t> entry_offsets_{0};
  std::vector<DistanceEntry> entries_;
  std::vector<std::uint32_t> entry_level_;
  std::vector<std::size_t> level_offsets_{0};
  std::vector<DistanceLevel> levels_;
};

}  // namespace linkpred

#include "linkpred/graph_enumeration.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace linkpred {

namespace {

// Colour refinement with canonical colour names: a colour is the rank of
// (previous colour, sorted neighbour colours) among all signatures, so the
// final colouring does not depend on the input labelling.
std::vector<std::size_t> refine_colours(const AdjacencyRows& rows) {
  const std::size_t n = rows.size();
  std::vector<std::size_t> colour(n);
  for (std::size_t v = 0; v < n; ++v) colour[v] = static_cast<std::size_t>(std::popcount(rows[v]));
  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<std::size_t>> signature(n);
    for (std::size_t v = 0; v < n; ++v) {
      signature[v].push_back(colour[v]);
      std::vector<std::size_t> around;
      for (std::size_t w = 0; w < n; ++w) {
        if (rows[v] >> w & 1u) around.push_back(colour[w]);
      }
      std::sort(around.begin(), around.end());
      signature[v].insert(signature[v].end(), around.begin(), around.end());
    }
    std::vector<std::vector<std::size_t>> distinct(signature);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t v = 0; v < n; ++v) {
      colour[v] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), signature[v]) -
                                           distinct.begin());
    }
    if (distinct.size() == classes) return colour;
    classes = distinct.size();
  }
}

}  // namespace

std::vector<std::uint16_t> canonical_form(const AdjacencyRows& rows) {
  const std::size_t n = rows.size();
  if (n > 16) throw std::invalid_argument("canonical_form: at most 16 nodes");
  const auto colour = refine_colours(rows);
  std::vector<std::size_t> slot_colour(colour);
  std::sort(slot_colour.begin(), slot_colour.end());

  std::vector<std::size_t> placed(n);
  std::vector<std::uint16_t> code(n), best;
  std::uint32_t used = 0;
  // Positions are filled in colour order; within a colour class every
  // assignment is tried and the smallest relabelled adjacency wins.
  auto assign = [&](auto& self, std::size_t pos) -> void {
    if (pos == n) {
      for (std::size_t i = 0; i < n; ++i) {
        std::uint16_t row = 0;
        for (std::size_t j = 0; j < n; ++j) {
          if (rows[placed[i]] >> placed[j] & 1u) row |= static_cast<std::uint16_t>(1u << j);
        }
        code[i] = row;
      }
      if (best.empty() || code < best) best = code;
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if ((used >> v & 1u) || colour[v] != slot_colour[pos]) continue;
      used |= 1u << v;
      placed[pos] = v;
      self(self, pos + 1);
      used &= ~(1u << v);
    }
  };
  assign(assign, 0);
  // Prefix the colour sizes so graphs with different refinements never
  // share a code.
  std::vector<std::uint16_t> out;
  out.reserve(2 * n);
  for (auto c : slot_colour) out.push_back(static_cast<std::uint16_t>(c));
  out.insert(out.end(), best.begin(), best.end());
  return out;
}

std::vector<AdjacencyRows> connected_graphs(std::size_t n) {
  if (n == 0) return {};
  if (n > 9) throw std::invalid_argument("connected_graphs: enumeration limited to 9 nodes");
  std::vector<AdjacencyRows> current{AdjacencyRows{0}};
  for (std::size_t size = 2; size <= n; ++size) {
    std::set<std::vector<std::uint16_t>> seen;
    std::vector<AdjacencyRows> next;
    const std::size_t old = size - 1;
    for (const auto& base : current) {
      for (std::uint32_t attach = 1; attach < (1u << old); ++attach) {
        AdjacencyRows g(base);
        g.push_back(static_cast<std::uint16_t>(attach));
        for (std::size_t v = 0; v < old; ++v) {
          if (attach >> v & 1u) g[v] = static_cast<std::uint16_t>(g[v] | (1u << old));
        }
        if (seen.insert(canonical_form(g)).second) next.push_back(std::move(g));
      }
    }
    current = std::move(next);
  }
  return current;
}

Graph to_graph(const AdjacencyRows& rows) {
  std::vector<WeightedEdge> edges;
  for (std::size_t u = 0; u < rows.size(); ++u) {
    for (std::size_t v = u + 1; v < rows.size(); ++v) {
      if (rows[u] >> v & 1u) edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), 1.0});
    }
  }
  return Graph::from_edges(rows.size(), edges);
}

}  // namespace linkpred

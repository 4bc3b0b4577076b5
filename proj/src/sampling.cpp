#include "linkpred/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace linkpred {

EdgeRemoval remove_random_edges(const Graph& graph, double fraction, const RandomSeed& seed) {
  if (graph.edge_count() == 0) throw std::invalid_argument("remove_random_edges: graph has no edges");
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw std::invalid_argument("remove_random_edges: fraction must lie in (0, 1)");
  }
  const auto edges = graph.edges();
  const auto count = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(edges.size())));
  if (count < 1) throw std::invalid_argument("remove_random_edges: fraction removes no edge");

  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng = make_rng(seed);
  // Partial Fisher-Yates: the first `count` slots are a uniform sample.
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + uniform_index(rng, order.size() - i);
    std::swap(order[i], order[j]);
  }

  EdgeRemoval out;
  out.missing.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& e = edges[order[i]];
    out.missing.push_back({e.u, e.v});
  }
  std::sort(out.missing.begin(), out.missing.end());
  out.observed = graph.without_edges(out.missing);
  return out;
}

}  // namespace linkpred

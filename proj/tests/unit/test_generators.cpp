#include <gtest/gtest.h>

#include "linkpred/generators.hpp"
#include "linkpred/neighborhood.hpp"
#include "linkpred/sampling.hpp"

using namespace linkpred;

TEST(GeneratePa, SmallExamples) {
  auto g = generate_pa(5, 3, 2, {1, 0});
  EXPECT_EQ(g.node_count(), 5u);
  EXPECT_EQ(g.edge_count(), 7u);
  auto t = generate_pa(3, 3, 2, {1, 0});
  EXPECT_EQ(t.edge_count(), 3u);
  EXPECT_TRUE(t.has_edge(0, 1) && t.has_edge(1, 2) && t.has_edge(0, 2));
}

TEST(GeneratePa, EdgeCountFormulaAcrossParameters) {
  std::uint64_t stream = 0;
  for (std::size_t m0 = 1; m0 <= 6; ++m0) {
    for (std::size_t m = 1; m <= m0; ++m) {
      for (std::size_t n : {m0, m0 + 1, std::size_t{40}, std::size_t{200}}) {
        if (n < m0) continue;
        auto g = generate_pa(n, m0, m, {3, stream++});
        EXPECT_EQ(g.edge_count(), m0 * (m0 - 1) / 2 + (n - m0) * m) << n << ' ' << m0 << ' ' << m;
      }
    }
  }
}

TEST(GeneratePa, DeterministicPerSeed) {
  auto a = generate_pa(300, 3, 2, {11, 4});
  auto b = generate_pa(300, 3, 2, {11, 4});
  auto c = generate_pa(300, 3, 2, {11, 5});
  EXPECT_EQ(graph_checksum(a), graph_checksum(b));
  EXPECT_NE(graph_checksum(a), graph_checksum(c));
}

TEST(GeneratePa, RejectsBadParameters) {
  EXPECT_THROW(generate_pa(5, 3, 0, {}), std::invalid_argument);
  EXPECT_THROW(generate_pa(5, 2, 3, {}), std::invalid_argument);
  EXPECT_THROW(generate_pa(2, 3, 2, {}), std::invalid_argument);
}

TEST(GeneratePa, DegreeBiasTowardsOldNodes) {
  // Under preferential attachment the first nodes end up far above the mean
  // degree of 4.
  double early = 0.0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    auto g = generate_pa(500, 3, 2, {21, s});
    early += static_cast<double>(g.degree(0) + g.degree(1) + g.degree(2)) / 3.0;
  }
  EXPECT_GT(early / 50.0, 20.0);
}

TEST(GeneratePa, MeanBallAfterRemovalMatchesPublishedV1) {
  // 1000 graphs with n = 500, m0 = 3, m = 2; measured on the 30%-removed
  // graph, the published V_1 is 3.788.
  double total = 0.0;
  const int graphs = 1000;
  for (int s = 0; s < graphs; ++s) {
    auto g = generate_pa(500, 3, 2, {2024, static_cast<std::uint64_t>(s)});
    auto observed = remove_random_edges(g, 0.3, {2025, static_cast<std::uint64_t>(s)}).observed;
    total += NeighborhoodTable::build(observed, 1).mean_ball_size();
  }
  EXPECT_NEAR(total / graphs, 3.788, 0.1);
}

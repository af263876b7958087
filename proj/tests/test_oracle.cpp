#include <algorithm>

#include <gtest/gtest.h>

#include <irred/bits.hpp>
#include <irred/harness.hpp>
#include <irred/oracle.hpp>

#include "graphs.hpp"

using namespace irred;
using namespace testgraphs;

TEST(IsIrredundant, PathExamples) {
  const Graph g = path(3);
  EXPECT_TRUE(is_irredundant(g, {0, 2}));
  EXPECT_FALSE(is_irredundant(g, {0, 1}));
  EXPECT_TRUE(is_irredundant(g, {}));
  EXPECT_TRUE(is_irredundant(g, {1}));
}

TEST(IsMaximalIrredundant, Examples) {
  const Graph g = path(3);
  EXPECT_TRUE(is_maximal_irredundant(g, {1}));
  EXPECT_FALSE(is_maximal_irredundant(g, {0}));
  EXPECT_TRUE(is_maximal_irredundant(g, {0, 2}));
  EXPECT_TRUE(is_maximal_irredundant(edgeless(4), {0, 1, 2, 3}));
  EXPECT_FALSE(is_maximal_irredundant(g, {0, 1}));
}

TEST(Certify, Examples) {
  const auto p4 = certify(path(4), {1, 2});
  ASSERT_EQ(p4.size(), 2u);
  EXPECT_EQ(p4[0], (KingCertificate{1, 0}));
  EXPECT_EQ(p4[1], (KingCertificate{2, 3}));
  const auto p3 = certify(path(3), {0, 2});
  EXPECT_EQ(p3, (std::vector<KingCertificate>{{0, std::nullopt}, {2, std::nullopt}}));
  EXPECT_EQ(certify(edgeless(1), {0}),
            (std::vector<KingCertificate>{{0, std::nullopt}}));
  EXPECT_THROW(certify(path(3), {0, 1}), std::invalid_argument);
}

TEST(Certify, LowestIdGarden) {
  // 0 has private neighbors 2 and 3; the lower one is chosen
  const Graph g = from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}});
  const auto c = certify(g, {1, 0});
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], (KingCertificate{0, 2}));
  EXPECT_EQ(c[1], (KingCertificate{1, 4}));
}

TEST(DominationChain, Examples) {
  EXPECT_EQ(domination_chain(path(3)), (ChainValues{1, 1, 2, 2}));
  EXPECT_EQ(domination_chain(cycle(4)), (ChainValues{2, 2, 2, 2}));
  EXPECT_EQ(domination_chain(star(3)), (ChainValues{1, 1, 3, 3}));
  EXPECT_EQ(domination_chain(edgeless(3)), (ChainValues{3, 3, 3, 3}));
  EXPECT_EQ(domination_chain(complete(5)), (ChainValues{1, 1, 1, 1}));
}

TEST(DominationChain, GuardsOrder) {
  EXPECT_THROW(domination_chain(edgeless(25)), std::length_error);
}

TEST(DominationChain, InequalitiesOnAllSmallGraphs) {
  for (int n = 1; n <= 6; ++n)
    for_all_graphs(n, [](const Graph &g) {
      const ChainValues c = domination_chain(g);
      ASSERT_LE(c.ir, c.gamma);
      ASSERT_LE(c.gamma, c.alpha);
      ASSERT_LE(c.alpha, c.IR);
      ASSERT_LE(c.gamma, 2 * c.ir - 1);
      ASSERT_GT(2 * c.ir, c.gamma);
    });
}

TEST(Oracle, EnumerationAgreesWithChain) {
  for (int n = 1; n <= 6; ++n)
    for_all_graphs(n, [n](const Graph &g) {
      const auto adj = adjacency_masks(g);
      const ChainValues c = domination_chain(g);
      ASSERT_EQ(oracle::max_irredundant_upto(adj, n), c.IR);
      ASSERT_TRUE(oracle::has_maximal_irredundant_of_size(adj, c.ir));
      ASSERT_TRUE(oracle::has_maximal_irredundant_of_size(adj, c.IR));
      for (int s = 0; s < c.ir; ++s)
        ASSERT_FALSE(oracle::has_maximal_irredundant_of_size(adj, s));
    });
}

TEST(Oracle, MaskAndListFormsAgree) {
  for_all_graphs(5, [](const Graph &g) {
    const auto adj = adjacency_masks(g);
    for (mask_t I = 0; I < 32; ++I) {
      ASSERT_EQ(oracle::irredundant(adj, I), is_irredundant(g, to_list(I)));
      ASSERT_EQ(oracle::maximal_irredundant(adj, I),
                is_maximal_irredundant(g, to_list(I)));
    }
  });
}

TEST(Oracle, DegreeOneVertexInSomeMaximumSet) {
  for (int n = 2; n <= 7; ++n)
    for_all_graphs(n, [n](const Graph &g) {
      const auto adj = adjacency_masks(g);
      int IR = -1;
      for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 1)
          continue;
        if (IR < 0)
          IR = oracle::max_irredundant_upto(adj, n);
        int best = 0;
        oracle::for_each_irredundant(adj, n, [&](mask_t I, int s) {
          if (I >> v & 1)
            best = std::max(best, s);
          return best < IR;
        });
        ASSERT_EQ(best, IR);
      }
    });
}

TEST(Certify, GardensDistinctAndPrivate) {
  for_all_graphs(5, [](const Graph &g) {
    const auto adj = adjacency_masks(g);
    oracle::for_each_irredundant(adj, 5, [&](mask_t I, int) {
      const auto cert = certify(g, to_list(I));
      std::vector<int> used(g.n(), 0);
      for (const auto &c : cert) {
        EXPECT_TRUE(I >> c.king & 1);
        if (!c.garden) {
          EXPECT_EQ(adj[c.king] & I, mask_t{0});
          continue;
        }
        const vertex_t u = *c.garden;
        EXPECT_FALSE(I >> u & 1);
        EXPECT_EQ(++used[u], 1);
        EXPECT_EQ(adj[u] & I, bit(c.king));
      }
      return true;
    });
  });
}

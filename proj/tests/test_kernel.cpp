#include <gtest/gtest.h>

#include <irred/bits.hpp>
#include <irred/harness.hpp>
#include <irred/kernel.hpp>
#include <irred/oracle.hpp>

#include "graphs.hpp"

using namespace irred;
using namespace testgraphs;

namespace {

int upper_ir_oracle(const Graph &g) {
  auto [h, map] = g.compacted();
  return oracle::max_irredundant_upto(adjacency_masks(h), h.n());
}

int lower_ir_oracle(const Graph &g) {
  auto [h, map] = g.compacted();
  const auto adj = adjacency_masks(h);
  for (int s = 0;; ++s)
    if (oracle::has_maximal_irredundant_of_size(adj, s))
      return s;
}

bool is_matching(const Graph &g, const std::vector<edge_t> &L) {
  std::vector<bool> used(g.n(), false);
  for (auto [u, v] : L) {
    if (!g.has_edge(u, v) || used[u] || used[v])
      return false;
    used[u] = used[v] = true;
  }
  for (auto [u, v] : g.edges())
    if (!used[u] && !used[v])
      return false;
  return true;
}

} // namespace

TEST(KernelCoMinMaxIR, Examples) {
  EXPECT_EQ(kernel_cominmaxir(cycle(10), 5).verdict, KernelVerdict::Yes);
  const auto r = kernel_cominmaxir(cycle(10), 6);
  EXPECT_EQ(r.verdict, KernelVerdict::Reduced);
  EXPECT_EQ(r.graph.alive_count(), 10);
  EXPECT_LE(r.graph.alive_count(), 2 * 6 - 1);

  Graph g = cycle(4);
  Graph g6(6);
  for (auto [u, v] : g.edges())
    g6.add_edge(u, v);
  const auto s = kernel_cominmaxir(g6, 3);
  EXPECT_EQ(s.verdict, KernelVerdict::Reduced);
  EXPECT_EQ(s.k, 3);
  EXPECT_EQ(s.graph.alive_count(), 4);
  EXPECT_FALSE(s.graph.alive(4));
  EXPECT_FALSE(s.graph.alive(5));
  EXPECT_FALSE(lower_ir_oracle(g6) <= 6 - 3);
  EXPECT_FALSE(lower_ir_oracle(s.graph) <= 4 - 3);
}

TEST(KernelCoMinMaxIR, RejectsNegativeK) {
  EXPECT_THROW(kernel_cominmaxir(path(3), -1), std::invalid_argument);
  EXPECT_THROW(kernel_comaxir(path(3), -1), std::invalid_argument);
}

TEST(MaximalMatching, Examples) {
  EXPECT_EQ(maximal_matching(path(4)), (std::vector<edge_t>{{0, 1}, {2, 3}}));
  EXPECT_EQ(maximal_matching(complete(3)).size(), 1u);
  EXPECT_TRUE(maximal_matching(edgeless(4)).empty());
}

TEST(MaximalMatching, RandomGraphsAreMaximal) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = gen_random_graph(14, 0.2, seed);
    ASSERT_TRUE(is_matching(g, maximal_matching(g)));
  }
}

TEST(FindCrown, StarExamples) {
  const Graph k13 = star(3);
  const auto c = find_crown(k13, {{0, 1}});
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->H, (vertex_list{0}));
  EXPECT_TRUE(std::find(c->C.begin(), c->C.end(), 2) != c->C.end());
  EXPECT_TRUE(std::find(c->C.begin(), c->C.end(), 3) != c->C.end());
  EXPECT_TRUE(crown_valid(k13, *c));

  const Graph k15 = star(5);
  const auto d = find_crown(k15, {{0, 1}});
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->H, (vertex_list{0}));
  EXPECT_GE(d->C.size(), 4u);
  EXPECT_TRUE(crown_valid(k15, *d));
}

TEST(FindCrown, NoneWithoutExposedVertices) {
  EXPECT_FALSE(find_crown(path(2), {{0, 1}}).has_value());
}

TEST(FindCrown, RejectsNonMaximalMatching) {
  EXPECT_THROW(find_crown(path(4), {{0, 1}}), std::invalid_argument);
}

TEST(FindCrown, RandomCrownsAreValid) {
  int found = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Graph g = gen_random_graph(16, 0.12, seed);
    const auto c = find_crown(g, maximal_matching(g));
    if (!c)
      continue;
    ++found;
    ASSERT_TRUE(crown_valid(g, *c)) << seed;
  }
  EXPECT_GT(found, 50);
}

TEST(CrownValid, DetectsBrokenCrowns) {
  const Graph g = star(3);
  EXPECT_FALSE(crown_valid(g, Crown{{1, 2, 3}, {}, {}}));
  EXPECT_FALSE(crown_valid(g, Crown{{0, 1}, {}, {}}));
  EXPECT_FALSE(crown_valid(g, Crown{{1, 2}, {0}, {{0, 3}}}));
  EXPECT_TRUE(crown_valid(g, Crown{{1, 2}, {0}, {{0, 1}}}));
}

TEST(KernelCoMaxIR, Examples) {
  EXPECT_EQ(kernel_comaxir(complete(4), 1).verdict, KernelVerdict::No);
  EXPECT_LT(upper_ir_oracle(complete(4)), 4 - 1);

  const auto s = kernel_comaxir(star(5), 1);
  EXPECT_EQ(s.verdict, KernelVerdict::Yes);
  EXPECT_EQ(s.graph.alive_count(), 0);
  EXPECT_EQ(s.k, 0);
  EXPECT_EQ(upper_ir_oracle(star(5)), 5);

  EXPECT_EQ(kernel_comaxir(cycle(6), 2).verdict, KernelVerdict::No);
  EXPECT_EQ(upper_ir_oracle(cycle(6)), 3);
}

TEST(KernelCoMaxIR, AnswerPreservationAndSizeBound) {
  const double ps[] = {0.2, 0.5, 0.8};
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const int n = 4 + static_cast<int>(seed % 11);
    const Graph g = gen_random_graph(n, ps[seed % 3], seed);
    const int IR = upper_ir_oracle(g);
    for (int k = 0; k <= n; ++k) {
      const bool expected = IR >= n - k;
      const auto out = kernel_comaxir(g, k);
      bool got;
      if (out.verdict == KernelVerdict::Reduced) {
        const int m = out.graph.alive_count();
        ASSERT_LE(m, 3 * out.k) << seed << ' ' << k;
        got = upper_ir_oracle(out.graph) >= m - out.k;
      } else {
        got = out.verdict == KernelVerdict::Yes;
      }
      ASSERT_EQ(got, expected) << "seed " << seed << " k " << k;
      if (out.verdict == KernelVerdict::No &&
          static_cast<int>(maximal_matching(g).size()) > k) {
        ASSERT_LT(IR, n - k);
      }
    }
  }
}

TEST(KernelCoMinMaxIR, AnswerPreservationAndSizeBound) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 3 + static_cast<int>(seed % 10);
    const Graph g = gen_random_graph(n, 0.15 + (seed % 5) * 0.15, seed);
    const int ir = lower_ir_oracle(g);
    for (int k = 0; k <= n; ++k) {
      const auto out = kernel_cominmaxir(g, k);
      bool got;
      if (out.verdict == KernelVerdict::Reduced) {
        const int m = out.graph.alive_count();
        ASSERT_LE(m, 2 * k - 1);
        got = lower_ir_oracle(out.graph) <= m - out.k;
      } else {
        ASSERT_NE(out.verdict, KernelVerdict::No);
        got = true;
      }
      ASSERT_EQ(got, ir <= n - k) << "seed " << seed << " k " << k;
    }
  }
}

#include <random>

#include <gtest/gtest.h>

#include <irred/graph.hpp>
#include <irred/harness.hpp>
#include <irred/undo_log.hpp>

#include "graphs.hpp"

using namespace irred;
using namespace testgraphs;

TEST(Graph, AddEdgeKeepsSortedSymmetricAdjacency) {
  Graph g(4);
  g.add_edge(2, 0);
  g.add_edge(0, 3);
  g.add_edge(1, 0);
  EXPECT_EQ(g.neighbors(0), (vertex_list{1, 2, 3}));
  EXPECT_TRUE(g.has_edge(3, 0));
  EXPECT_EQ(g.degree(0), 3);
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(Graph, RejectsSelfLoopAndDuplicate) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(1, 0), std::invalid_argument);
}

TEST(Graph, KillAndReviveRestoresAdjacency) {
  Graph g = cycle(5);
  const Graph before = g;
  const auto nbrs = g.kill_vertex(2);
  EXPECT_FALSE(g.alive(2));
  EXPECT_EQ(g.degree(2), 0);
  EXPECT_FALSE(g.has_edge(1, 2));
  EXPECT_EQ(g.alive_count(), 4);
  g.revive_vertex(2, nbrs);
  EXPECT_EQ(g, before);
}

TEST(Graph, CompactedMapsNewToOld) {
  Graph g = path(4);
  g.kill_vertex(1);
  auto [h, map] = g.compacted();
  EXPECT_EQ(h.n(), 3);
  EXPECT_EQ(map, (vertex_list{0, 2, 3}));
  EXPECT_TRUE(h.has_edge(1, 2));
  EXPECT_EQ(h.edge_count(), 1u);
}

TEST(Components, PathPlusIsolated) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  const auto c = connected_components(g);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], (vertex_list{0, 1, 2}));
  EXPECT_EQ(c[1], (vertex_list{3}));
}

TEST(Components, CycleIsOneComponent) {
  EXPECT_EQ(connected_components(cycle(4)).size(), 1u);
}

TEST(Components, EdgelessGivesSingletons) {
  const auto c = connected_components(edgeless(3));
  ASSERT_EQ(c.size(), 3u);
  for (int v = 0; v < 3; ++v)
    EXPECT_EQ(c[v], (vertex_list{v}));
}

TEST(Components, RandomGraphsArePartitioned) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = gen_random_graph(12, 0.15, seed);
    const auto comps = connected_components(g);
    std::vector<int> owner(g.n(), -1);
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (vertex_t v : comps[i]) {
        ASSERT_EQ(owner[v], -1);
        owner[v] = static_cast<int>(i);
      }
    for (int v = 0; v < g.n(); ++v)
      ASSERT_GE(owner[v], 0);
    for (auto [u, v] : g.edges())
      ASSERT_EQ(owner[u], owner[v]);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      // internally connected: a walk from the first vertex reaches all
      std::vector<bool> seen(g.n(), false);
      std::vector<vertex_t> stack{comps[i][0]};
      seen[comps[i][0]] = true;
      std::size_t reached = 0;
      while (!stack.empty()) {
        const vertex_t x = stack.back();
        stack.pop_back();
        ++reached;
        for (vertex_t y : g.neighbors(x))
          if (!seen[y]) {
            seen[y] = true;
            stack.push_back(y);
          }
      }
      ASSERT_EQ(reached, comps[i].size());
      if (i > 0) {
        ASSERT_LT(comps[i - 1][0], comps[i][0]);
      }
    }
  }
}

TEST(UndoLog, RollbackRestoresGraphAndLabels) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = gen_random_graph(10, 0.4, trial);
    Labeling L(g.n());
    L.refresh(g);
    const Graph g0 = g;
    const Labeling L0 = L;
    const auto h0 = g.state_hash();
    UndoLog log;
    const auto mark = log.mark();
    for (int step = 0; step < 20; ++step) {
      const int v = static_cast<int>(rng() % g.n());
      switch (rng() % 3) {
      case 0:
        if (g.alive(v) && g.degree(v) > 0)
          log.remove_edge(g, v, g.neighbors(v)[rng() % g.degree(v)]);
        break;
      case 1:
        if (g.alive(v))
          log.kill_vertex(g, v);
        break;
      default:
        log.set_label(L, v, kAllLabels[rng() % kAllLabels.size()]);
      }
    }
    log.rollback(mark, g, &L);
    ASSERT_EQ(g, g0);
    ASSERT_EQ(g.state_hash(), h0);
    ASSERT_EQ(L, L0);
  }
}

TEST(UndoLog, PartialRollback) {
  Graph g = path(4);
  UndoLog log;
  log.remove_edge(g, 0, 1);
  const Graph mid = g;
  const auto m = log.mark();
  log.kill_vertex(g, 2);
  log.rollback(m, g);
  EXPECT_EQ(g, mid);
  EXPECT_FALSE(g.has_edge(0, 1));
}

TEST(BitState, RollbackMatchesCopySemantics) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = gen_random_graph(9, 0.5, trial);
    BitState s(adjacency_masks(g));
    s.set_label(0, Label::Ke);
    const BitState copy = s;
    const auto m = s.mark();
    for (int step = 0; step < 15; ++step) {
      const int v = static_cast<int>(rng() % g.n());
      if (rng() % 2)
        s.isolate(v);
      else
        s.set_label(v, kAllLabels[rng() % kAllLabels.size()]);
    }
    s.rollback(m);
    ASSERT_TRUE(s.same_state(copy));
    ASSERT_EQ(s.state_hash(), copy.state_hash());
  }
}

#ifndef IRRED_TESTS_GRAPHS_HPP
#define IRRED_TESTS_GRAPHS_HPP

#include <utility>
#include <vector>

#include <irred/graph.hpp>

namespace testgraphs {

using irred::Graph;

inline Graph edgeless(int n) { return Graph(n); }

inline Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v)
    g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle(int n) {
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

inline Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      g.add_edge(u, v);
  return g;
}

// center 0, leaves 1..leaves
inline Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v)
    g.add_edge(0, v);
  return g;
}

inline Graph from_edges(int n, const std::vector<std::pair<int, int>> &es) {
  Graph g(n);
  for (auto [u, v] : es)
    g.add_edge(u, v);
  return g;
}

/// Calls f on every labeled graph with n vertices.
template <class F> void for_all_graphs(int n, F &&f) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      pairs.emplace_back(u, v);
  const long total = 1L << pairs.size();
  for (long code = 0; code < total; ++code) {
    Graph g(n);
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if (code >> e & 1)
        g.add_edge(pairs[e].first, pairs[e].second);
    f(g);
  }
}

} // namespace testgraphs

#endif

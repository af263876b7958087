#ifndef IRRED_GRAPH_HPP
#define IRRED_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace irred {

using vertex_t = int;
using vertex_list = std::vector<vertex_t>;
using edge_t = std::pair<vertex_t, vertex_t>;

/** \brief Simple undirected graph on ids 0..n-1 with tombstoned deletions. */
class Graph {
public:
  Graph() = default;
  explicit Graph(int n) : adj_(n), alive_(n, true) {
    if (n < 0)
      throw std::invalid_argument("negative vertex count");
  }

  int n() const { return static_cast<int>(adj_.size()); }

  bool alive(vertex_t v) const { return alive_[v]; }

  int alive_count() const {
    return static_cast<int>(std::count(alive_.begin(), alive_.end(), true));
  }

  const vertex_list &neighbors(vertex_t v) const { return adj_[v]; }

  int degree(vertex_t v) const { return static_cast<int>(adj_[v].size()); }

  bool has_edge(vertex_t u, vertex_t v) const {
    check(u);
    check(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  // Throws on self-loops, duplicates and dead endpoints.
  void add_edge(vertex_t u, vertex_t v) {
    check(u);
    check(v);
    if (u == v)
      throw std::invalid_argument("self-loop");
    if (!alive_[u] || !alive_[v])
      throw std::invalid_argument("edge to a dead vertex");
    if (has_edge(u, v))
      throw std::invalid_argument("duplicate edge");
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
  }

  // Returns false if the edge was absent.
  bool remove_edge(vertex_t u, vertex_t v) {
    if (!has_edge(u, v))
      return false;
    erase_sorted(adj_[u], v);
    erase_sorted(adj_[v], u);
    return true;
  }

  // Removes all incident edges and marks v dead; returns the old neighbors.
  vertex_list kill_vertex(vertex_t v) {
    check(v);
    vertex_list old = adj_[v];
    for (vertex_t u : old)
      erase_sorted(adj_[u], v);
    adj_[v].clear();
    alive_[v] = false;
    return old;
  }

  void revive_vertex(vertex_t v, const vertex_list &nbrs) {
    check(v);
    alive_[v] = true;
    for (vertex_t u : nbrs) {
      insert_sorted(adj_[v], u);
      insert_sorted(adj_[u], v);
    }
  }

  std::size_t edge_count() const {
    std::size_t m = 0;
    for (const auto &a : adj_)
      m += a.size();
    return m / 2;
  }

  // Edges (u,v) with u<v in lexicographic order.
  std::vector<edge_t> edges() const {
    std::vector<edge_t> out;
    for (vertex_t u = 0; u < n(); ++u)
      for (vertex_t v : adj_[u])
        if (u < v)
          out.emplace_back(u, v);
    return out;
  }

  vertex_list alive_vertices() const {
    vertex_list out;
    for (vertex_t v = 0; v < n(); ++v)
      if (alive_[v])
        out.push_back(v);
    return out;
  }

  // Induced copy on the alive vertices, re-indexed in increasing id order.
  // map[new] = old id.
  std::pair<Graph, vertex_list> compacted() const {
    vertex_list map = alive_vertices();
    std::vector<int> inv(n(), -1);
    for (std::size_t i = 0; i < map.size(); ++i)
      inv[map[i]] = static_cast<int>(i);
    Graph h(static_cast<int>(map.size()));
    for (auto [u, v] : edges())
      h.add_edge(inv[u], inv[v]);
    return {std::move(h), std::move(map)};
  }

  bool operator==(const Graph &o) const {
    return adj_ == o.adj_ && alive_ == o.alive_;
  }

  // FNV-1a over the full state, used to compare snapshots.
  std::uint64_t state_hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
      h ^= x;
      h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(n()));
    for (vertex_t v = 0; v < n(); ++v) {
      mix(alive_[v] ? 0xA11u : 0xDEADu);
      for (vertex_t u : adj_[v])
        mix(static_cast<std::uint64_t>(u) + 1);
      mix(0xFFFFFFFFull);
    }
    return h;
  }

private:
  void check(vertex_t v) const {
    if (v < 0 || v >= n())
      throw std::out_of_range("vertex id out of range");
  }
  static void insert_sorted(vertex_list &a, vertex_t x) {
    a.insert(std::lower_bound(a.begin(), a.end(), x), x);
  }
  static void erase_sorted(vertex_list &a, vertex_t x) {
    auto it = std::lower_bound(a.begin(), a.end(), x);
    if (it != a.end() && *it == x)
      a.erase(it);
  }

  std::vector<vertex_list> adj_;
  std::vector<bool> alive_;
};

/// Connected components of the alive vertices, each sorted, ordered by
/// smallest member.
inline std::vector<vertex_list> connected_components(const Graph &g) {
  std::vector<vertex_list> comps;
  std::vector<bool> seen(g.n(), false);
  for (vertex_t s = 0; s < g.n(); ++s) {
    if (!g.alive(s) || seen[s])
      continue;
    vertex_list comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (vertex_t u : g.neighbors(comp[i]))
        if (!seen[u]) {
          seen[u] = true;
          comp.push_back(u);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

} // namespace irred

#endif

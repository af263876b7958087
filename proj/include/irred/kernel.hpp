#ifndef IRRED_KERNEL_HPP
#define IRRED_KERNEL_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace irred {

enum class KernelVerdict { Yes, No, Reduced };

inline const char *verdict_name(KernelVerdict v) {
  switch (v) {
  case KernelVerdict::Yes:
    return "YES";
  case KernelVerdict::No:
    return "NO";
  default:
    return "Reduced";
  }
}

struct KernelOutcome {
  KernelVerdict verdict = KernelVerdict::Reduced;
  Graph graph;        // tombstoned copy of the input
  int k = 0;          // residual parameter
  vertex_list forced; // committed to the irredundant set (crown steps)
};

struct Crown {
  vertex_list C;
  vertex_list H;
  std::vector<edge_t> M; // (h, c) pairs
};

/// Greedy maximal matching over sorted edges, then improved until no
/// augmenting path of length three remains.
inline std::vector<edge_t> maximal_matching(const Graph &g) {
  std::vector<vertex_t> mate(g.n(), -1);
  for (auto [u, v] : g.edges())
    if (mate[u] < 0 && mate[v] < 0) {
      mate[u] = v;
      mate[v] = u;
    }
  // x - a = b - y with x, y exposed: swap ab for xa and by.
  bool changed = true;
  while (changed) {
    changed = false;
    for (vertex_t a = 0; a < g.n() && !changed; ++a) {
      const vertex_t b = mate[a];
      if (b < 0)
        continue;
      for (vertex_t x : g.neighbors(a)) {
        if (mate[x] >= 0 || x == b)
          continue;
        for (vertex_t y : g.neighbors(b)) {
          if (mate[y] >= 0 || y == x || y == a)
            continue;
          mate[x] = a;
          mate[a] = x;
          mate[b] = y;
          mate[y] = b;
          changed = true;
          break;
        }
        if (changed)
          break;
      }
    }
  }
  std::vector<edge_t> L;
  for (vertex_t u = 0; u < g.n(); ++u)
    if (mate[u] > u)
      L.emplace_back(u, mate[u]);
  return L;
}

/// Crown from the vertices left exposed by L, via a maximum bipartite
/// matching between O = V \ V(L) and N(O) and alternating reachability.
inline std::optional<Crown> find_crown(const Graph &g,
                                       const std::vector<edge_t> &L) {
  std::vector<bool> covered(g.n(), false);
  for (auto [u, v] : L)
    covered[u] = covered[v] = true;
  vertex_list O;
  for (vertex_t v : g.alive_vertices())
    if (!covered[v])
      O.push_back(v);
  for (vertex_t v : O)
    for (vertex_t u : g.neighbors(v))
      if (!covered[u])
        throw std::invalid_argument("find_crown: matching is not maximal");

  // Kuhn's augmenting paths, deterministic order.
  std::vector<vertex_t> match_o(g.n(), -1), match_h(g.n(), -1);
  std::vector<int> stamp(g.n(), -1);
  std::function<bool(vertex_t, int)> augment = [&](vertex_t o, int round) {
    for (vertex_t h : g.neighbors(o)) {
      if (stamp[h] == round)
        continue;
      stamp[h] = round;
      if (match_h[h] < 0 || augment(match_h[h], round)) {
        match_h[h] = o;
        match_o[o] = h;
        return true;
      }
    }
    return false;
  };
  int round = 0;
  for (vertex_t o : O)
    augment(o, round++);

  std::vector<bool> inC(g.n(), false), inH(g.n(), false);
  vertex_list queue;
  for (vertex_t o : O)
    if (match_o[o] < 0 && g.degree(o) >= 0) {
      inC[o] = true;
      queue.push_back(o);
    }
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (vertex_t h : g.neighbors(queue[i])) {
      if (inH[h])
        continue;
      inH[h] = true;
      const vertex_t o = match_h[h];
      if (o >= 0 && !inC[o]) {
        inC[o] = true;
        queue.push_back(o);
      }
    }
  Crown cr;
  for (vertex_t v = 0; v < g.n(); ++v) {
    if (inC[v])
      cr.C.push_back(v);
    if (inH[v]) {
      if (match_h[v] < 0)
        throw std::logic_error("find_crown: unmatched head vertex");
      cr.H.push_back(v);
      cr.M.emplace_back(v, match_h[v]);
    }
  }
  if (cr.C.empty())
    return std::nullopt;
  return cr;
}

/// Crown invariants: C independent, H = N(C), M saturates H into C.
inline bool crown_valid(const Graph &g, const Crown &cr) {
  std::vector<bool> inC(g.n(), false), inH(g.n(), false), usedC(g.n(), false),
      usedH(g.n(), false);
  for (vertex_t c : cr.C)
    inC[c] = true;
  for (vertex_t h : cr.H)
    inH[h] = true;
  std::vector<bool> nbr(g.n(), false);
  for (vertex_t c : cr.C)
    for (vertex_t u : g.neighbors(c)) {
      if (inC[u])
        return false;
      nbr[u] = true;
    }
  for (vertex_t v = 0; v < g.n(); ++v)
    if (nbr[v] != inH[v])
      return false;
  if (cr.M.size() != cr.H.size())
    return false;
  for (auto [h, c] : cr.M) {
    if (!inH[h] || !inC[c] || usedH[h] || usedC[c] || !g.has_edge(h, c))
      return false;
    usedH[h] = usedC[c] = true;
  }
  return true;
}

/// Counting kernel for "ir(G) <= n-k".
inline KernelOutcome kernel_cominmaxir(const Graph &g, int k) {
  if (k < 0)
    throw std::invalid_argument("k must be nonnegative");
  KernelOutcome out{KernelVerdict::Reduced, g, k, {}};
  for (vertex_t v : g.alive_vertices())
    if (g.degree(v) == 0)
      out.graph.kill_vertex(v);
  if (2L * k <= out.graph.alive_count())
    out.verdict = KernelVerdict::Yes;
  return out;
}

/// Crown kernel for "IR(G) >= n-k".
inline KernelOutcome kernel_comaxir(const Graph &g, int k) {
  if (k < 0)
    throw std::invalid_argument("k must be nonnegative");
  KernelOutcome out{KernelVerdict::Reduced, g, k, {}};
  for (int guard = 0; guard <= g.n(); ++guard) {
    const auto L = maximal_matching(out.graph);
    if (static_cast<int>(L.size()) > out.k) {
      out.verdict = KernelVerdict::No;
      return out;
    }
    if (out.graph.alive_count() <= 3 * out.k)
      break;
    const auto cr = find_crown(out.graph, L);
    if (!cr)
      throw std::logic_error("kernel_comaxir: no crown above 3k vertices");
    for (vertex_t c : cr->C) {
      out.forced.push_back(c);
      out.graph.kill_vertex(c);
    }
    for (vertex_t h : cr->H)
      out.graph.kill_vertex(h);
    out.k -= static_cast<int>(cr->H.size());
    if (out.k < 0) {
      out.verdict = KernelVerdict::No;
      return out;
    }
  }
  std::sort(out.forced.begin(), out.forced.end());
  if (out.graph.alive_count() == 0)
    out.verdict = KernelVerdict::Yes;
  return out;
}

} // namespace irred

#endif

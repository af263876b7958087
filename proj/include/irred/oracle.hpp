#ifndef IRRED_ORACLE_HPP
#define IRRED_ORACLE_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bits.hpp"
#include "graph.hpp"

namespace irred {

struct ChainValues {
  int ir = 0;
  int gamma = 0;
  int alpha = 0;
  int IR = 0;
  bool operator==(const ChainValues &) const = default;
};

/// One king of an irredundant set and its private neighbor (nullopt when the
/// king is isolated in G[I]).
struct KingCertificate {
  vertex_t king;
  std::optional<vertex_t> garden;
  bool operator==(const KingCertificate &) const = default;
};

namespace oracle {

// Bitmask kernels shared by the solvers. adj has one mask per vertex.

inline bool irredundant(const std::vector<mask_t> &adj, mask_t I) {
  for (mask_t rest = I; rest; rest &= rest - 1) {
    const int v = lowest(rest);
    if (!(adj[v] & I))
      continue;
    bool has_private = false;
    for (mask_t out = adj[v] & ~I; out; out &= out - 1)
      if ((adj[lowest(out)] & I) == bit(v)) {
        has_private = true;
        break;
      }
    if (!has_private)
      return false;
  }
  return true;
}

inline bool maximal_irredundant(const std::vector<mask_t> &adj, mask_t I) {
  if (!irredundant(adj, I))
    return false;
  const int n = static_cast<int>(adj.size());
  for (int v = 0; v < n; ++v)
    if (!(I & bit(v)) && irredundant(adj, I | bit(v)))
      return false;
  return true;
}

// Depth-first enumeration of irredundant sets in increasing-element order.
// Irredundance is closed under taking subsets, so a failing prefix prunes
// the whole subtree. f(mask, size) returns false to stop.
template <class F>
inline bool for_each_irredundant(const std::vector<mask_t> &adj, int max_size,
                                 F &&f) {
  const int n = static_cast<int>(adj.size());
  struct Rec {
    const std::vector<mask_t> &adj;
    int n, max_size;
    F &f;
    bool go(mask_t I, int size, int from) {
      if (!f(I, size))
        return false;
      if (size == max_size)
        return true;
      for (int v = from; v < n; ++v) {
        const mask_t J = I | bit(v);
        if (irredundant(adj, J) && !go(J, size + 1, v + 1))
          return false;
      }
      return true;
    }
  } rec{adj, n, max_size, f};
  return rec.go(0, 0, 0);
}

/// Largest irredundant set of size at most cap (or -1 when cap < 0).
inline int max_irredundant_upto(const std::vector<mask_t> &adj, int cap) {
  if (cap < 0)
    return -1;
  int best = 0;
  for_each_irredundant(adj, cap, [&](mask_t, int s) {
    best = std::max(best, s);
    return best < cap;
  });
  return best;
}

/// Whether a maximal irredundant set of exactly the given size exists.
inline bool has_maximal_irredundant_of_size(const std::vector<mask_t> &adj,
                                            int size) {
  bool found = false;
  for_each_irredundant(adj, size, [&](mask_t I, int s) {
    if (s == size && maximal_irredundant(adj, I))
      found = true;
    return !found;
  });
  return found;
}

} // namespace oracle

inline bool is_irredundant(const Graph &g, const vertex_list &I) {
  std::vector<bool> in(g.n(), false);
  for (vertex_t v : I)
    in.at(v) = true;
  for (vertex_t v : I) {
    bool isolated = true, has_private = false;
    for (vertex_t u : g.neighbors(v)) {
      if (in[u]) {
        isolated = false;
        continue;
      }
      int owners = 0;
      for (vertex_t x : g.neighbors(u))
        owners += in[x];
      if (owners == 1)
        has_private = true;
    }
    if (!isolated && !has_private)
      return false;
  }
  return true;
}

inline bool is_maximal_irredundant(const Graph &g, const vertex_list &I) {
  if (!is_irredundant(g, I))
    return false;
  std::vector<bool> in(g.n(), false);
  for (vertex_t v : I)
    in[v] = true;
  vertex_list J = I;
  for (vertex_t v : g.alive_vertices()) {
    if (in[v])
      continue;
    J.push_back(v);
    if (is_irredundant(g, J))
      return false;
    J.pop_back();
  }
  return true;
}

/// Private-neighbor certificate, lowest-id garden per king.
inline std::vector<KingCertificate> certify(const Graph &g,
                                            const vertex_list &I) {
  if (!is_irredundant(g, I))
    throw std::invalid_argument("set is not irredundant");
  std::vector<bool> in(g.n(), false);
  for (vertex_t v : I)
    in[v] = true;
  vertex_list kings = I;
  std::sort(kings.begin(), kings.end());
  std::vector<KingCertificate> out;
  for (vertex_t v : kings) {
    KingCertificate c{v, std::nullopt};
    bool isolated = true;
    for (vertex_t u : g.neighbors(v))
      isolated = isolated && !in[u];
    if (!isolated)
      for (vertex_t u : g.neighbors(v)) {
        if (in[u])
          continue;
        int owners = 0;
        for (vertex_t x : g.neighbors(u))
          owners += in[x];
        if (owners == 1) {
          c.garden = u;
          break;
        }
      }
    out.push_back(c);
  }
  return out;
}

/// ir, gamma, alpha, IR by full subset enumeration.
inline ChainValues domination_chain(const Graph &g, int max_order = 24) {
  const int n = g.n();
  if (n > max_order || n > 30)
    throw std::length_error("domination_chain: enumeration guard exceeded");
  const std::vector<mask_t> adj = adjacency_masks(g);
  const mask_t all = full_mask(n);
  const mask_t dead = all & ~to_mask(g.alive_vertices());
  const std::size_t total = std::size_t{1} << n;
  std::vector<char> irr(total, 0);
  ChainValues c{n + 1, n + 1, 0, 0};
  for (std::size_t S = 0; S < total; ++S) {
    if (S & dead)
      continue;
    const mask_t I = S;
    irr[S] = S == 0 || (irr[S & (S - 1)] && oracle::irredundant(adj, I));
    const int size = popcount(I);
    mask_t closed = I;
    bool independent = true;
    for_each_bit(I, [&](int v) {
      closed |= adj[v];
      independent = independent && !(adj[v] & I);
    });
    if ((closed | dead) == all)
      c.gamma = std::min(c.gamma, size);
    if (independent)
      c.alpha = std::max(c.alpha, size);
  }
  for (std::size_t S = 0; S < total; ++S) {
    if (!irr[S])
      continue;
    const int size = popcount(S);
    c.IR = std::max(c.IR, size);
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!(S & bit(v)) && !(dead & bit(v)) && irr[S | bit(v)])
        maximal = false;
    if (maximal)
      c.ir = std::min(c.ir, size);
  }
  return c;
}

} // namespace irred

#endif

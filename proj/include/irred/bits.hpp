#ifndef IRRED_BITS_HPP
#define IRRED_BITS_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace irred {

using mask_t = std::uint64_t;

inline constexpr int kMaxMaskOrder = 64;

inline constexpr mask_t bit(int v) { return mask_t{1} << v; }
inline int popcount(mask_t m) { return std::popcount(m); }
inline int lowest(mask_t m) { return std::countr_zero(m); }
inline mask_t full_mask(int n) { return n >= 64 ? ~mask_t{0} : bit(n) - 1; }

template <class F> inline void for_each_bit(mask_t m, F &&f) {
  while (m) {
    f(lowest(m));
    m &= m - 1;
  }
}

/// Adjacency masks of g; requires n <= 64.
inline std::vector<mask_t> adjacency_masks(const Graph &g) {
  if (g.n() > kMaxMaskOrder)
    throw std::length_error("bitmask routines support at most 64 vertices");
  std::vector<mask_t> adj(g.n(), 0);
  for (vertex_t v = 0; v < g.n(); ++v)
    for (vertex_t u : g.neighbors(v))
      adj[v] |= bit(u);
  return adj;
}

inline mask_t to_mask(const vertex_list &vs) {
  mask_t m = 0;
  for (vertex_t v : vs) {
    if (v < 0 || v >= kMaxMaskOrder)
      throw std::out_of_range("vertex id outside mask range");
    m |= bit(v);
  }
  return m;
}

inline vertex_list to_list(mask_t m) {
  vertex_list out;
  for_each_bit(m, [&](int v) { out.push_back(v); });
  return out;
}

} // namespace irred

#endif

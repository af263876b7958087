#ifndef IRRED_SOLVER_MC_HPP
#define IRRED_SOLVER_MC_HPP

#include <array>
#include <climits>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bit_state.hpp"
#include "bits.hpp"
#include "graph.hpp"
#include "labeling.hpp"
#include "measure_value.hpp"

namespace irred {

/// Deliberate bugs for checking that the campaign catches them.
enum class McFault { None, IsolatedToWilderness };

struct McOptions {
  Weights weights{};
  bool skip_w = true; // omit the W branch in the two-neighbor case
  McFault fault = McFault::None;
};

struct RuleFiring {
  int rule;           // 1..13
  MeasureValue delta; // phi before minus phi after
};

struct ReductionStatus {
  enum Outcome { Continue, No } outcome = Continue;
  std::vector<RuleFiring> log;
  Graph graph;     // reduced graph
  Labeling labels; // reduced labeling
};

namespace mc {

inline constexpr int kInfinity = INT_MAX / 4;

inline MeasureValue phi(const BitState &s, int k, const Weights &w) {
  const mask_t ke_a = s.ke_active(), ge_a = s.ge_active();
  const int wild = popcount(s.set(Label::W));
  const int ge_i = popcount(s.set(Label::Ge) & ~ge_a);
  const int loose = popcount(ke_a) + popcount(ge_a);
  const int nots = popcount(s.set(Label::NotG) | s.set(Label::NotK));
  return MeasureValue::from_int(k - wild - ge_i) - w.omega_l * loose -
         w.omega_n * nots;
}

// One firing of the first applicable rule. Returns the rule number,
// -rule when it answers NO, or 0 at fixpoint.
inline int reduce_step(BitState &s, McFault fault = McFault::None) {
  const int n = s.n();
  const mask_t KI = s.set(Label::Ki), KE = s.set(Label::Ke),
               GE = s.set(Label::Ge), NG = s.set(Label::NotG),
               NK = s.set(Label::NotK), U = s.set(Label::Unlabeled),
               W = s.set(Label::W);
  auto adj = [&](int v) { return s.adj(v); };

  // 1: a king with two gardens, a garden with two kings, or an internal
  // king next to any king or garden.
  for (int x = 0; x < n; ++x) {
    const mask_t b = bit(x);
    if ((b & (KI | KE)) && popcount(adj(x) & GE) >= 2)
      return -1;
    if ((b & GE) && popcount(adj(x) & (KI | KE)) >= 2)
      return -1;
    if ((b & KI) && (adj(x) & (KI | KE | GE)))
      return -1;
  }
  // 2: isolated external king or garden
  for (mask_t m = KE | GE; m; m &= m - 1)
    if (!adj(lowest(m)))
      return -2;
  // 3: isolated Not-vertex
  for (mask_t m = NG | NK; m; m &= m - 1)
    if (!adj(lowest(m))) {
      s.set_label(lowest(m), Label::W);
      return 3;
    }
  // 4: isolated unlabeled vertex
  for (mask_t m = U; m; m &= m - 1)
    if (!adj(lowest(m))) {
      s.set_label(lowest(m),
                  fault == McFault::IsolatedToWilderness ? Label::W : Label::Ki);
      return 4;
    }
  // 5: Ke-Ke or Ge-Ge edge
  for (mask_t m = KE | GE; m; m &= m - 1) {
    const int v = lowest(m);
    const mask_t same = (KE & bit(v)) ? KE : GE;
    if (const mask_t e = adj(v) & same) {
      s.remove_edge(v, lowest(e));
      return 5;
    }
  }
  // 6: Ke-NotG or Ge-NotK edge
  for (mask_t m = KE | GE; m; m &= m - 1) {
    const int v = lowest(m);
    const mask_t bad = (KE & bit(v)) ? NG : NK;
    if (const mask_t e = adj(v) & bad) {
      s.remove_edge(v, lowest(e));
      return 6;
    }
  }
  // 7: edges at wilderness
  for (mask_t m = W; m; m &= m - 1)
    if (adj(lowest(m))) {
      s.isolate(lowest(m));
      return 7;
    }
  // 8: NotK-NotK or NotG-NotG edge
  for (mask_t m = NG | NK; m; m &= m - 1) {
    const int v = lowest(m);
    const mask_t same = (NG & bit(v)) ? NG : NK;
    if (const mask_t e = adj(v) & same) {
      s.remove_edge(v, lowest(e));
      return 8;
    }
  }
  // 9: unlabeled leaf hanging off an unlabeled vertex
  for (mask_t m = U; m; m &= m - 1) {
    const int u = lowest(m);
    if (popcount(adj(u)) == 1 && (adj(u) & U)) {
      s.set_label(u, Label::Ki);
      return 9;
    }
  }
  // 10: neighbors of internal kings are wilderness
  for (mask_t m = KI; m; m &= m - 1)
    if (const mask_t nb = adj(lowest(m))) {
      for_each_bit(nb, [&](int x) { s.set_label(x, Label::W); });
      return 10;
    }
  // 11: forced pairing through a degree-one endpoint
  const mask_t ge_a = s.ge_active(), ke_a = s.ke_active();
  for (int side = 0; side < 2; ++side) {
    const mask_t loose = side == 0 ? ge_a : ke_a;
    const mask_t cand = U | (side == 0 ? NG : NK);
    for (mask_t m = loose; m; m &= m - 1) {
      const int u = lowest(m);
      for (mask_t c = adj(u) & cand; c; c &= c - 1) {
        const int v = lowest(c);
        if (popcount(adj(u)) == 1 || popcount(adj(v)) == 1) {
          // a forced partner that already sees a second partner fails
          // rule 1 right after; answering here keeps the measure monotone
          if (popcount(adj(v) & (side == 0 ? GE : KI | KE)) >= 2)
            return -11;
          s.set_label(v, side == 0 ? Label::Ke : Label::Ge);
          return 11;
        }
      }
    }
  }
  // 12: two neighboring gardens (kings)
  for (int v = 0; v < n; ++v) {
    const mask_t b = bit(v);
    if (popcount(adj(v) & GE) >= 2) {
      if (b & U) {
        s.set_label(v, Label::NotK);
        return 12;
      }
      if (b & NG) {
        s.set_label(v, Label::W);
        return 12;
      }
    }
    if (popcount(adj(v) & KE) >= 2) {
      if (b & U) {
        s.set_label(v, Label::NotG);
        return 12;
      }
      if (b & NK) {
        s.set_label(v, Label::W);
        return 12;
      }
    }
  }
  // 13: neighborhoods of a settled king/garden pair
  for (mask_t m = KE & ~ke_a; m; m &= m - 1) {
    const int u = lowest(m);
    const mask_t g = adj(u) & GE;
    if (popcount(g) != 1)
      continue;
    const int v = lowest(g);
    const mask_t a = adj(u) & U, b = adj(u) & NK, c = adj(v) & U,
                 d = adj(v) & NG;
    if (a | b | c | d) {
      for_each_bit(a, [&](int x) { s.set_label(x, Label::NotG); });
      for_each_bit(b | d, [&](int x) { s.set_label(x, Label::W); });
      for_each_bit(c, [&](int x) { s.set_label(x, Label::NotK); });
      return 13;
    }
  }
  return 0;
}

/// Minimum added cost |W| + |Ge| of completing a path or cycle of active
/// vertices, or kInfinity.
inline int dp_path_cycle(const BitState &s, mask_t comp) {
  enum { SW, SKi, SKeP, SKeN, SGeP, SGeN, NS };
  auto allowed = [&](int v, int st) {
    switch (s.label(v)) {
    case Label::Unlabeled:
      return true;
    case Label::NotG:
      return st == SW || st == SKeP || st == SKeN;
    case Label::NotK:
      return st == SW || st == SGeP || st == SGeN;
    case Label::Ke:
      return st == SKeP || st == SKeN;
    case Label::Ge:
      return st == SGeP || st == SGeN;
    default:
      return false;
    }
  };
  auto cost = [](int st) { return st == SW || st == SGeP || st == SGeN; };
  auto is_ke = [](int st) { return st == SKeP || st == SKeN; };
  auto is_ge = [](int st) { return st == SGeP || st == SGeN; };
  // x precedes y along an edge
  auto compat = [&](int x, int y) {
    if ((x == SKeN) != (y == SGeP) && (x == SKeN || y == SGeP))
      return false;
    if ((x == SGeN) != (y == SKeP) && (x == SGeN || y == SKeP))
      return false;
    if ((x == SKi && y != SW) || (y == SKi && x != SW))
      return false;
    if (is_ke(x) && is_ge(y) && !(x == SKeN && y == SGeP))
      return false;
    if (is_ge(x) && is_ke(y) && !(x == SGeN && y == SKeP))
      return false;
    return true;
  };

  // Order the component along the path or cycle.
  std::vector<int> order;
  int start = -1;
  bool cycle = true;
  for (mask_t m = comp; m; m &= m - 1)
    if (popcount(s.adj(lowest(m)) & comp) <= 1) {
      start = lowest(m);
      cycle = false;
      break;
    }
  if (start < 0)
    start = lowest(comp);
  int prev = -1, cur = start;
  while (cur >= 0) {
    order.push_back(cur);
    const mask_t next = s.adj(cur) & comp & ~bit(cur) &
                        ~(prev >= 0 ? bit(prev) : mask_t{0});
    int nxt = next ? lowest(next) : -1;
    if (nxt == start)
      nxt = -1;
    prev = cur;
    cur = nxt;
  }
  if (static_cast<int>(order.size()) != popcount(comp))
    throw std::logic_error("dp_path_cycle: component is not a path or cycle");
  if (cycle && order.size() < 3)
    cycle = false;

  int best = kInfinity;
  const int len = static_cast<int>(order.size());
  for (int first = 0; first < NS; ++first) {
    if (!allowed(order[0], first))
      continue;
    if (!cycle && (first == SKeP || first == SGeP))
      continue;
    std::array<int, NS> dp;
    dp.fill(kInfinity);
    dp[first] = cost(first);
    for (int i = 1; i < len; ++i) {
      std::array<int, NS> nd;
      nd.fill(kInfinity);
      for (int a = 0; a < NS; ++a) {
        if (dp[a] >= kInfinity)
          continue;
        for (int b = 0; b < NS; ++b)
          if (allowed(order[i], b) && compat(a, b))
            nd[b] = std::min(nd[b], dp[a] + cost(b));
      }
      dp = nd;
    }
    for (int last = 0; last < NS; ++last) {
      if (dp[last] >= kInfinity)
        continue;
      if (cycle ? !compat(last, first)
                : (last == SKeN || last == SGeN))
        continue;
      best = std::min(best, dp[last]);
    }
    if (!cycle)
      continue;
  }
  return best;
}

// Components of the graph induced by mask.
inline std::vector<mask_t> components_of(const BitState &s, mask_t within) {
  std::vector<mask_t> out;
  mask_t left = within;
  while (left) {
    mask_t comp = bit(lowest(left)), frontier = comp;
    while (frontier) {
      const int v = lowest(frontier);
      frontier &= frontier - 1;
      const mask_t nb = s.adj(v) & within & ~comp;
      comp |= nb;
      frontier |= nb;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

/** \brief Measure & Conquer search with a component-cost memo that survives across
 *  calls on the same solver object. */
class Solver {
public:
  explicit Solver(McOptions opt = {}, const SearchObserver *obs = nullptr)
      : opt_(opt), obs_(obs) {
    if (!opt_.weights.feasible())
      throw std::invalid_argument("weights outside the feasible region");
  }

  SearchResult decide(const std::vector<mask_t> &adj, int k) {
    if (k < 0)
      throw std::invalid_argument("k must be nonnegative");
    stats_ = {};
    BitState s(adj);
    SearchResult r;
    r.answer = search(s, k, 0, adj);
    r.stats = stats_;
    return r;
  }

  // Minimum budget for a fully active component instance, or kInfinity
  // when it exceeds cap.
  int component_cost(const BitState &sub, int cap, int depth) {
    const std::string key = signature(sub);
    auto &memo = memo_[key];
    if (memo.exact >= 0)
      return memo.exact <= cap ? memo.exact : kInfinity;
    int lb = popcount(sub.set(Label::Ge) | sub.set(Label::NotK));
    lb = std::max(lb, memo.lower);
    for (int k2 = lb; k2 <= cap; ++k2) {
      BitState copy = sub;
      if (search(copy, k2, depth, sub.adjacency())) {
        memo_[key].exact = k2;
        return k2;
      }
    }
    memo_[key].lower = std::max(memo_[key].lower, cap + 1);
    return kInfinity;
  }

  const SearchStats &stats() const { return stats_; }

private:
  struct MemoEntry {
    int exact = -1;
    int lower = 0;
  };

  static std::string signature(const BitState &s) {
    std::string key;
    key.reserve(s.n() * 9);
    for (int v = 0; v < s.n(); ++v) {
      key.push_back(static_cast<char>(s.label(v)));
      const mask_t a = s.adj(v);
      key.append(reinterpret_cast<const char *>(&a), sizeof a);
    }
    return key;
  }

  static BitState extract(const BitState &s, mask_t comp) {
    std::vector<int> ids;
    for_each_bit(comp, [&](int v) { ids.push_back(v); });
    std::array<int, 64> pos{};
    for (std::size_t i = 0; i < ids.size(); ++i)
      pos[ids[i]] = static_cast<int>(i);
    std::vector<mask_t> adj(ids.size(), 0);
    for (std::size_t i = 0; i < ids.size(); ++i)
      for_each_bit(s.adj(ids[i]) & comp, [&](int u) { adj[i] |= bit(pos[u]); });
    BitState sub(adj);
    for (std::size_t i = 0; i < ids.size(); ++i)
      sub.set_label(static_cast<int>(i), s.label(ids[i]));
    return sub;
  }

  void fire(const char *name) { ++stats_.ruleFirings[name]; }

  // Reduce to a fixpoint; false means NO.
  bool reduce(BitState &s, int k) {
    static const char *names[] = {"",   "1",  "2",  "3",  "4",  "5", "6",
                                  "7",  "8",  "9",  "10", "11", "12", "13"};
    for (;;) {
      const MeasureValue before = phi(s, k, opt_.weights);
      const int r = reduce_step(s, opt_.fault);
      if (r == 0)
        return true;
      if (r < 0) {
        fire(names[-r]);
        return false;
      }
      fire(names[r]);
      if (phi(s, k, opt_.weights) > before)
        ++stats_.measureIncreases;
    }
  }

  bool search(BitState &s, int k, int depth, const std::vector<mask_t> &base) {
    stats_.maxDepth = std::max(stats_.maxDepth, depth);
    if (!reduce(s, k))
      return false;
    if (obs_ && obs_->on_fixpoint)
      obs_->on_fixpoint(s);
    if (phi(s, k, opt_.weights) < MeasureValue{}) {
      ++stats_.prunes;
      if (obs_ && obs_->on_prune)
        obs_->on_prune(s, k, base);
      return false;
    }
    ++stats_.nodes;
    const mask_t act = s.active();
    if (!act)
      return true;

    const int fixed = popcount(s.set(Label::W)) +
                      popcount(s.set(Label::Ge) & ~s.ge_active());
    int maxdeg = 0;
    for_each_bit(act, [&](int v) {
      maxdeg = std::max(maxdeg, popcount(s.adj(v) & act));
    });
    if (maxdeg <= 2) {
      fire("dp");
      int total = fixed;
      for (mask_t comp : components_of(s, act)) {
        total += dp_path_cycle(s, comp);
        if (total > k)
          return false;
      }
      return true;
    }
    const auto comps = components_of(s, act);
    if (comps.size() >= 2) {
      fire("split");
      int budget = k - fixed;
      for (mask_t comp : comps) {
        const int c = component_cost(extract(s, comp), budget, depth + 1);
        if (c >= kInfinity)
          return false;
        budget -= c;
      }
      return true;
    }
    return branch_step(s, k, depth, base, act);
  }

  bool try_labels(BitState &s, int k, int depth,
                  const std::vector<mask_t> &base,
                  std::initializer_list<std::pair<int, Label>> as) {
    const std::size_t m = s.mark();
    for (auto [v, l] : as)
      s.set_label(v, l);
    const bool ok = search(s, k, depth + 1, base);
    s.rollback(m);
    return ok;
  }

  bool branch_step(BitState &s, int k, int depth,
                   const std::vector<mask_t> &base, mask_t act) {
    const mask_t U = s.set(Label::Unlabeled), NG = s.set(Label::NotG),
                 NK = s.set(Label::NotK);
    // lines 6-8
    if (const mask_t nots = NG | NK) {
      fire("b-not");
      const int v = lowest(nots);
      const Label as = (NG & bit(v)) ? Label::Ke : Label::Ge;
      return try_labels(s, k, depth, base, {{v, as}}) ||
             try_labels(s, k, depth, base, {{v, Label::W}});
    }
    const mask_t ke_a = s.ke_active(), ge_a = s.ge_active();
    // lines 9-10
    for (mask_t m = U; m; m &= m - 1) {
      const int v = lowest(m);
      const mask_t nb = s.adj(v) & act;
      if (popcount(nb) == 2 && (nb & ge_a) && (nb & ke_a)) {
        fire("b-two");
        if (try_labels(s, k, depth, base, {{v, Label::Ke}}) ||
            try_labels(s, k, depth, base, {{v, Label::Ge}}))
          return true;
        return !opt_.skip_w && try_labels(s, k, depth, base, {{v, Label::W}});
      }
    }
    // lines 11-14
    if (const mask_t loose = ke_a | ge_a) {
      fire("b-pair");
      const int v = max_degree(s, loose, 0);
      const Label mate = (ke_a & bit(v)) ? Label::Ge : Label::Ke;
      for (mask_t m = s.adj(v) & U; m; m &= m - 1)
        if (try_labels(s, k, depth, base, {{lowest(m), mate}}))
          return true;
      return false;
    }
    // lines 15-16
    fire("b-free");
    mask_t deg2 = 0;
    for_each_bit(act, [&](int v) {
      if (popcount(s.adj(v) & act) == 2)
        deg2 |= bit(v);
    });
    const int v = max_degree(s, U, deg2);
    if (try_labels(s, k, depth, base, {{v, Label::W}}) ||
        try_labels(s, k, depth, base, {{v, Label::Ki}}))
      return true;
    const mask_t ke = s.set(Label::Ke), ge = s.set(Label::Ge);
    for (mask_t m = s.adj(v) & (U | ge); m; m &= m - 1)
      if (try_labels(s, k, depth, base, {{v, Label::Ke}, {lowest(m), Label::Ge}}))
        return true;
    for (mask_t m = s.adj(v) & (U | ke); m; m &= m - 1)
      if (try_labels(s, k, depth, base, {{lowest(m), Label::Ke}, {v, Label::Ge}}))
        return true;
    return false;
  }

  // Maximum degree in among; ties prefer a neighbor in prefer, then low id.
  static int max_degree(const BitState &s, mask_t among, mask_t prefer) {
    int best = -1, best_deg = -1;
    bool best_pref = false;
    for (mask_t m = among; m; m &= m - 1) {
      const int v = lowest(m);
      const int d = s.degree(v);
      const bool p = (s.adj(v) & prefer) != 0;
      if (d > best_deg || (d == best_deg && p && !best_pref)) {
        best = v;
        best_deg = d;
        best_pref = p;
      }
    }
    return best;
  }

  McOptions opt_;
  const SearchObserver *obs_;
  SearchStats stats_;
  std::unordered_map<std::string, MemoEntry> memo_;
};

inline BitState load_state(const Graph &g, const Labeling &L) {
  BitState s(adjacency_masks(g));
  for (int v = 0; v < g.n(); ++v)
    s.set_label(v, L.label[v]);
  return s;
}

} // namespace mc

/// Reduction rules applied to a fixpoint on a copy of (g, L).
inline ReductionStatus reduce_mc(const Graph &g, const Labeling &L,
                                 const Weights &w, int k) {
  BitState s = mc::load_state(g, L);
  ReductionStatus st;
  for (;;) {
    const MeasureValue before = mc::phi(s, k, w);
    const int r = mc::reduce_step(s);
    if (r == 0)
      break;
    if (r < 0) {
      st.outcome = ReductionStatus::No;
      st.log.push_back({-r, MeasureValue{}});
      break;
    }
    st.log.push_back({r, before - mc::phi(s, k, w)});
  }
  st.graph = s.current_graph();
  st.labels = s.to_labeling(st.graph);
  return st;
}

/// Minimum completion cost of a path/cycle component of active vertices;
/// nullopt when no completion exists.
inline std::optional<int> dp_max_degree_two(const Graph &g, const Labeling &L,
                                            const vertex_list &component) {
  const BitState s = mc::load_state(g, L);
  const mask_t comp = to_mask(component);
  for_each_bit(comp, [&](int v) {
    if (popcount(s.adj(v) & comp) > 2)
      throw std::invalid_argument("dp_max_degree_two: degree above two");
  });
  const int c = mc::dp_path_cycle(s, comp);
  if (c >= mc::kInfinity)
    return std::nullopt;
  return c;
}

/// Smallest budget for which the component alone answers YES.
inline std::optional<int> component_cost(const Graph &g, const Labeling &L,
                                         const vertex_list &component,
                                         const Weights &w = {}) {
  Graph sub(static_cast<int>(component.size()));
  std::vector<int> pos(g.n(), -1);
  for (std::size_t i = 0; i < component.size(); ++i)
    pos[component[i]] = static_cast<int>(i);
  Labeling sl(sub.n());
  for (std::size_t i = 0; i < component.size(); ++i) {
    for (vertex_t u : g.neighbors(component[i]))
      if (pos[u] > static_cast<int>(i))
        sub.add_edge(static_cast<int>(i), pos[u]);
    sl.label[i] = L.label[component[i]];
  }
  mc::Solver solver(McOptions{w});
  const int c = solver.component_cost(mc::load_state(sub, sl), sub.n(), 0);
  if (c >= mc::kInfinity)
    return std::nullopt;
  return c;
}

/// IR(g) >= n-k via the Measure & Conquer search.
inline SearchResult decide_comaxir_mc(const Graph &g, int k,
                                      const Weights &w = {},
                                      const SearchObserver *obs = nullptr) {
  mc::Solver solver(McOptions{w}, obs);
  const Graph h = g.alive_count() == g.n() ? g : g.compacted().first;
  return solver.decide(adjacency_masks(h), k);
}

} // namespace irred

#endif

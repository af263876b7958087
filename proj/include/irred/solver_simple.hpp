#ifndef IRRED_SOLVER_SIMPLE_HPP
#define IRRED_SOLVER_SIMPLE_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "bit_state.hpp"
#include "bits.hpp"
#include "graph.hpp"
#include "labeling.hpp"
#include "measure_value.hpp"
#include "oracle.hpp"

namespace irred {

enum class SimpleMode { CoMaxIR, ExactCoMinMaxIR };

namespace simple {

// Validity for one vertex; NotG/NotK labels do not occur in this solver, so
// the open vertices are exactly the unlabeled ones.
inline bool vertex_ok(const BitState &s, int x, mask_t ki, mask_t ke,
                      mask_t ge, mask_t wild) {
  const mask_t nb = s.adj(x);
  if (ki & bit(x))
    return (nb & ~wild) == 0;
  const mask_t open = ~(ki | ke | ge | wild);
  if (ke & bit(x))
    return (nb & (ge | open)) && popcount(nb & ge) <= 1;
  if (ge & bit(x))
    return (nb & (ke | open)) && popcount(nb & ke) <= 1;
  return true;
}

inline bool labeling_ok(const BitState &s) {
  const mask_t ki = s.set(Label::Ki), ke = s.set(Label::Ke),
               ge = s.set(Label::Ge), wild = s.set(Label::W);
  for (int v = 0; v < s.n(); ++v)
    if (!vertex_ok(s, v, ki, ke, ge, wild))
      return false;
  return true;
}

struct NotMasks {
  mask_t not_g = 0, not_k = 0;
};

inline NotMasks not_masks(const BitState &s) {
  const mask_t ki = s.set(Label::Ki), ke = s.set(Label::Ke),
               ge = s.set(Label::Ge), wild = s.set(Label::W);
  NotMasks out;
  for_each_bit(s.set(Label::Unlabeled), [&](int v) {
    const mask_t scope = s.adj(v) | bit(v);
    bool bad_g = false, bad_k = false;
    for_each_bit(scope, [&](int x) {
      bad_g = bad_g || !vertex_ok(s, x, ki, ke, ge | bit(v), wild);
      bad_k = bad_k || !vertex_ok(s, x, ki, ke | bit(v), ge, wild);
    });
    if (bad_g)
      out.not_g |= bit(v);
    if (bad_k)
      out.not_k |= bit(v);
  });
  return out;
}

// One firing of R1..R4 in order; returns the rule number or 0 at fixpoint.
inline int reduce_step(BitState &s) {
  const mask_t wild = s.set(Label::W);
  for (mask_t m = wild; m; m &= m - 1)
    if (s.adj(lowest(m))) {
      s.isolate(lowest(m));
      return 1;
    }
  const mask_t open = s.set(Label::Unlabeled);
  for (mask_t m = open; m; m &= m - 1)
    if (!s.adj(lowest(m))) {
      s.set_label(lowest(m), Label::Ki);
      return 2;
    }
  const mask_t ke = s.set(Label::Ke), ge = s.set(Label::Ge);
  for (int side = 0; side < 2; ++side) {
    const mask_t own = side == 0 ? ke : ge, other = side == 0 ? ge : ke;
    for (mask_t m = own; m; m &= m - 1) {
      const int v = lowest(m);
      const mask_t cand = s.adj(v) & open;
      if (!(s.adj(v) & other) && popcount(cand) == 1) {
        s.set_label(lowest(cand), side == 0 ? Label::Ge : Label::Ke);
        return 3;
      }
    }
  }
  const NotMasks nm = not_masks(s);
  if (const mask_t both = nm.not_g & nm.not_k) {
    s.set_label(lowest(both), Label::W);
    return 4;
  }
  return 0;
}

inline bool candidate_ok(const std::vector<mask_t> &adj0, const BitState &s,
                         int k, SimpleMode mode) {
  const int n = s.n();
  const mask_t I = full_mask(n) & ~(s.set(Label::W) | s.set(Label::Ge));
  const int size = popcount(I);
  if (mode == SimpleMode::CoMaxIR)
    return size >= n - k && oracle::irredundant(adj0, I);
  return size == n - k && oracle::maximal_irredundant(adj0, I);
}

class Solver {
public:
  Solver(const std::vector<mask_t> &adj, int k, SimpleMode mode,
         const SearchObserver *obs = nullptr)
      : adj0_(adj), state_(adj), k_(k), mode_(mode), obs_(obs) {}

  bool run() { return search(0); }
  const SearchStats &stats() const { return stats_; }

private:
  bool search(int depth) {
    stats_.maxDepth = std::max(stats_.maxDepth, depth);
    static const char *names[] = {"", "R1", "R2", "R3", "R4"};
    while (int r = reduce_step(state_))
      ++stats_.ruleFirings[names[r]];
    if (obs_ && obs_->on_fixpoint)
      obs_->on_fixpoint(state_);
    if (!labeling_ok(state_))
      return false;
    const int w = popcount(state_.set(Label::W));
    const int ke = popcount(state_.set(Label::Ke));
    const int ge = popcount(state_.set(Label::Ge));
    // phi = k - |W| - (|Ke|+|Ge|)/2, compared in half units
    if (2 * (k_ - w) - ke - ge < 0) {
      ++stats_.prunes;
      if (obs_ && obs_->on_prune)
        obs_->on_prune(state_, k_, adj0_);
      return false;
    }
    ++stats_.nodes;
    const mask_t open = state_.set(Label::Unlabeled);
    if (ke + w == k_ || ge + w == k_ || open == 0)
      return candidate_ok(adj0_, state_, k_, mode_);

    const NotMasks nm = not_masks(state_);
    if (const mask_t nots = nm.not_g | nm.not_k) {
      const int v = lowest(nots);
      const Label as = (nm.not_g & bit(v)) ? Label::Ke : Label::Ge;
      return branch(depth, {{v, as}}) || branch(depth, {{v, Label::W}});
    }

    const int v = pick(open);
    if (branch(depth, {{v, Label::W}}))
      return true;
    const mask_t nb = state_.adj(v);
    const mask_t ki = state_.set(Label::Ki), kem = state_.set(Label::Ke),
                 gem = state_.set(Label::Ge), wild = state_.set(Label::W);
    if (!(nb & (ki | kem | gem))) {
      std::vector<std::pair<int, Label>> as{{v, Label::Ki}};
      for_each_bit(nb & ~wild, [&](int u) { as.emplace_back(u, Label::W); });
      if (branch(depth, as))
        return true;
    }
    for (mask_t m = nb & ~(kem | ki | wild); m; m &= m - 1)
      if (branch(depth, {{v, Label::Ke}, {lowest(m), Label::Ge}}))
        return true;
    for (mask_t m = nb & ~(gem | ki | wild); m; m &= m - 1)
      if (branch(depth, {{lowest(m), Label::Ke}, {v, Label::Ge}}))
        return true;
    return false;
  }

  // Branch vertex: degree one; else max degree next to Ge/Ke; else max degree.
  int pick(mask_t open) const {
    for (mask_t m = open; m; m &= m - 1)
      if (state_.degree(lowest(m)) == 1)
        return lowest(m);
    const mask_t labeled = state_.set(Label::Ge) | state_.set(Label::Ke);
    int best = -1, best_deg = -1;
    for (mask_t m = open; m; m &= m - 1) {
      const int v = lowest(m);
      if ((state_.adj(v) & labeled) && state_.degree(v) > best_deg) {
        best = v;
        best_deg = state_.degree(v);
      }
    }
    if (best >= 0)
      return best;
    for (mask_t m = open; m; m &= m - 1) {
      const int v = lowest(m);
      if (state_.degree(v) > best_deg) {
        best = v;
        best_deg = state_.degree(v);
      }
    }
    return best;
  }

  bool branch(int depth, const std::vector<std::pair<int, Label>> &as) {
    const std::size_t m = state_.mark();
    for (auto [v, l] : as)
      state_.set_label(v, l);
    const bool ok = search(depth + 1);
    state_.rollback(m);
    return ok;
  }

  std::vector<mask_t> adj0_;
  BitState state_;
  int k_;
  SimpleMode mode_;
  const SearchObserver *obs_;
  SearchStats stats_;
};

inline std::vector<mask_t> solver_adjacency(const Graph &g) {
  if (g.alive_count() != g.n())
    return adjacency_masks(g.compacted().first);
  return adjacency_masks(g);
}

} // namespace simple

/// R1-R4 to a fixpoint on a copy of (g, L). Only Unlabeled/Ki/Ke/Ge/W
/// labels are meaningful here.
inline std::pair<Graph, Labeling> reduce_simple(const Graph &g,
                                                const Labeling &L) {
  BitState s(adjacency_masks(g));
  for (int v = 0; v < g.n(); ++v)
    s.set_label(v, is_open(L.label[v]) ? Label::Unlabeled : L.label[v]);
  while (simple::reduce_step(s)) {
  }
  Graph h = s.current_graph();
  Labeling out = s.to_labeling(h);
  return {std::move(h), std::move(out)};
}

/// Candidate test: is V \ (W u Ge) a solution for the given mode?
inline bool check_candidate(const Graph &g, const Labeling &L, int k,
                            SimpleMode mode) {
  const auto adj = adjacency_masks(g);
  BitState s(adj);
  for (int v = 0; v < g.n(); ++v)
    s.set_label(v, L.label[v]);
  return simple::candidate_ok(adj, s, k, mode);
}

/// Core search of the simple algorithm. In exact mode it answers whether some
/// maximal irredundant set of size exactly n-k exists.
inline SearchResult search_simple(const Graph &g, int k, SimpleMode mode,
                                  const SearchObserver *obs = nullptr) {
  if (k < 0)
    throw std::invalid_argument("k must be nonnegative");
  simple::Solver s(simple::solver_adjacency(g), k, mode, obs);
  SearchResult r;
  r.answer = s.run();
  r.stats = s.stats();
  return r;
}

/// IR(g) >= n-k via the simple algorithm.
inline SearchResult decide_comaxir_simple(const Graph &g, int k,
                                          const SearchObserver *obs = nullptr) {
  return search_simple(g, k, SimpleMode::CoMaxIR, obs);
}

/// ir(g) == n-k: a maximal irredundant set of size n-k exists and none of
/// any smaller size does.
inline SearchResult decide_exact_cominmaxir(const Graph &g, int k,
                                            const SearchObserver *obs = nullptr) {
  const int n = g.alive_count();
  SearchResult r = search_simple(g, k, SimpleMode::ExactCoMinMaxIR, obs);
  for (int k2 = n; r.answer && k2 > k; --k2) {
    SearchResult r2 = search_simple(g, k2, SimpleMode::ExactCoMinMaxIR, obs);
    r.stats.merge(r2.stats);
    if (r2.answer)
      r.answer = false;
  }
  return r;
}

} // namespace irred

#endif

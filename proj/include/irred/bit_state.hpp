#ifndef IRRED_BIT_STATE_HPP
#define IRRED_BIT_STATE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bits.hpp"
#include "graph.hpp"
#include "labeling.hpp"

namespace irred {

struct SearchStats {
  std::uint64_t nodes = 0;
  int maxDepth = 0;
  std::uint64_t prunes = 0;
  std::uint64_t measureIncreases = 0; // reduction firings that raised phi
  std::map<std::string, std::uint64_t> ruleFirings;

  void merge(const SearchStats &o) {
    nodes += o.nodes;
    maxDepth = std::max(maxDepth, o.maxDepth);
    prunes += o.prunes;
    measureIncreases += o.measureIncreases;
    for (const auto &[r, c] : o.ruleFirings)
      ruleFirings[r] += c;
  }
};

struct SearchResult {
  bool answer = false;
  SearchStats stats;
};

/** \brief Bitmask search state with a trail for backtracking.
 *
 *  Holds the current (edge-deleted) adjacency and one mask per label.
 *  Every mutation is trailed so rollback(mark) restores the exact state.
 */
class BitState {
public:
  BitState() = default;
  explicit BitState(const std::vector<mask_t> &adj)
      : adj_(adj), lab_(adj.size(), Label::Unlabeled) {
    sets_.fill(0);
    sets_[idx(Label::Unlabeled)] = full_mask(n());
  }

  int n() const { return static_cast<int>(adj_.size()); }
  mask_t adj(int v) const { return adj_[v]; }
  const std::vector<mask_t> &adjacency() const { return adj_; }
  Label label(int v) const { return lab_[v]; }
  mask_t set(Label l) const { return sets_[idx(l)]; }
  int degree(int v) const { return popcount(adj_[v]); }

  mask_t open() const {
    return set(Label::Unlabeled) | set(Label::NotG) | set(Label::NotK);
  }

  void set_label(int v, Label l) {
    const Label old = lab_[v];
    if (old == l)
      return;
    trail_.push_back({Entry::LabelChange, v, static_cast<int>(old)});
    sets_[idx(old)] &= ~bit(v);
    sets_[idx(l)] |= bit(v);
    lab_[v] = l;
  }

  void remove_edge(int u, int v) {
    if (!(adj_[u] & bit(v)))
      return;
    trail_.push_back({Entry::EdgeRemoval, u, v});
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
  }

  void isolate(int v) {
    for_each_bit(adj_[v], [&](int u) { remove_edge(v, u); });
  }

  std::size_t mark() const { return trail_.size(); }

  void rollback(std::size_t to) {
    while (trail_.size() > to) {
      const Entry e = trail_.back();
      trail_.pop_back();
      if (e.kind == Entry::EdgeRemoval) {
        adj_[e.a] |= bit(e.b);
        adj_[e.b] |= bit(e.a);
      } else {
        const Label cur = lab_[e.a];
        const Label old = static_cast<Label>(e.b);
        sets_[idx(cur)] &= ~bit(e.a);
        sets_[idx(old)] |= bit(e.a);
        lab_[e.a] = old;
      }
    }
  }

  // Activity sets derived from the labels.
  mask_t ke_active() const {
    mask_t out = 0;
    const mask_t ge = set(Label::Ge);
    for_each_bit(set(Label::Ke), [&](int v) {
      if (!(adj_[v] & ge))
        out |= bit(v);
    });
    return out;
  }
  mask_t ge_active() const {
    mask_t out = 0;
    const mask_t ke = set(Label::Ke);
    for_each_bit(set(Label::Ge), [&](int v) {
      if (!(adj_[v] & ke))
        out |= bit(v);
    });
    return out;
  }
  mask_t active() const { return open() | ke_active() | ge_active(); }

  Labeling to_labeling(const Graph &current) const {
    Labeling L(n());
    L.label = lab_;
    L.refresh(current);
    return L;
  }

  // Graph with the current (reduced) edge set.
  Graph current_graph() const {
    Graph g(n());
    for (int v = 0; v < n(); ++v)
      for_each_bit(adj_[v] & ~full_mask(v + 1), [&](int u) { g.add_edge(v, u); });
    return g;
  }

  std::uint64_t state_hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
      h ^= x;
      h *= 1099511628211ull;
    };
    for (int v = 0; v < n(); ++v) {
      mix(adj_[v]);
      mix(static_cast<std::uint64_t>(lab_[v]));
    }
    return h;
  }

  bool same_state(const BitState &o) const {
    return adj_ == o.adj_ && lab_ == o.lab_ && sets_ == o.sets_;
  }

private:
  struct Entry {
    enum Kind : int { EdgeRemoval, LabelChange } kind;
    int a, b;
  };
  static constexpr int idx(Label l) { return static_cast<int>(l); }

  std::vector<mask_t> adj_;
  std::vector<Label> lab_;
  std::array<mask_t, 7> sets_{};
  std::vector<Entry> trail_;
};

/// Observer hooks used by the verification campaign. Solvers call them
/// when a measure prune fires and after each reduction fixpoint.
struct SearchObserver {
  // base is the adjacency the (sub)instance was started on.
  std::function<void(const BitState &, int k, const std::vector<mask_t> &base)>
      on_prune;
  std::function<void(const BitState &)> on_fixpoint;
};

} // namespace irred

#endif

#ifndef IRRED_LABELING_HPP
#define IRRED_LABELING_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"
#include "measure_value.hpp"
#include "oracle.hpp"

namespace irred {

enum class Label : unsigned char { Unlabeled, Ki, Ke, Ge, NotG, NotK, W };

inline constexpr std::array<Label, 7> kAllLabels{
    Label::Unlabeled, Label::Ki,   Label::Ke, Label::Ge,
    Label::NotG,      Label::NotK, Label::W};

inline constexpr std::string_view label_name(Label l) {
  constexpr std::array<std::string_view, 7> names{"Unlabeled", "Ki",   "Ke",
                                                  "Ge",        "NotG", "NotK",
                                                  "W"};
  return names[static_cast<int>(l)];
}

inline Label label_from_name(std::string_view s) {
  for (Label l : kAllLabels)
    if (label_name(l) == s)
      return l;
  throw std::invalid_argument("unknown label: " + std::string(s));
}

// Open vertices: not yet king, garden or wilderness.
inline constexpr bool is_open(Label l) {
  return l == Label::Unlabeled || l == Label::NotG || l == Label::NotK;
}

/** \brief Per-vertex labels plus the derived active set and pairing. */
struct Labeling {
  std::vector<Label> label;
  std::vector<bool> active;
  std::vector<vertex_t> partner; // -1 when unpaired

  Labeling() = default;
  explicit Labeling(int n)
      : label(n, Label::Unlabeled), active(n, true), partner(n, -1) {}

  int n() const { return static_cast<int>(label.size()); }

  int count(Label l) const {
    int c = 0;
    for (Label x : label)
      c += x == l;
    return c;
  }

  // Ke/Ge vertices without an opposite-side neighbor are active; a vertex
  // with exactly one opposite-side neighbor is paired with it.
  void refresh(const Graph &g) {
    for (vertex_t v = 0; v < n(); ++v) {
      partner[v] = -1;
      const Label l = label[v];
      if (l == Label::Ke || l == Label::Ge) {
        const Label other = l == Label::Ke ? Label::Ge : Label::Ke;
        int seen = 0;
        for (vertex_t u : g.neighbors(v))
          if (label[u] == other) {
            ++seen;
            partner[v] = u;
          }
        if (seen != 1)
          partner[v] = -1;
        active[v] = seen == 0;
      } else {
        active[v] = is_open(l);
      }
    }
  }

  bool complete() const {
    for (Label l : label)
      if (is_open(l))
        return false;
    return true;
  }

  bool operator==(const Labeling &) const = default;
};

/// A labeling on n vertices with the given labels and derived activity.
inline Labeling make_labeling(const Graph &g, std::vector<Label> labels) {
  Labeling L(g.n());
  L.label = std::move(labels);
  L.refresh(g);
  return L;
}

namespace detail {

inline bool vertex_valid(const Graph &g, const std::vector<Label> &lab,
                         vertex_t x) {
  const Label l = lab[x];
  if (l == Label::Ki) {
    for (vertex_t u : g.neighbors(x))
      if (lab[u] != Label::W)
        return false;
    return true;
  }
  if (l != Label::Ke && l != Label::Ge)
    return true;
  const Label other = l == Label::Ke ? Label::Ge : Label::Ke;
  int opposite = 0;
  bool sees = false;
  for (vertex_t u : g.neighbors(x)) {
    if (lab[u] == other) {
      ++opposite;
      sees = true;
    } else if (is_open(lab[u])) {
      sees = true;
    }
  }
  return sees && opposite <= 1;
}

} // namespace detail

/// Labeling validity against the current graph.
inline bool is_valid(const Graph &g, const Labeling &L) {
  for (vertex_t v = 0; v < g.n(); ++v)
    if (!detail::vertex_valid(g, L.label, v))
      return false;
  return true;
}

struct NotSets {
  vertex_list not_g;
  vertex_list not_k;
};

/// Open vertices whose promotion to Ge (resp. Ke) would invalidate L.
/// Only v and its neighbors can change status, so only those are rechecked.
inline NotSets not_sets(const Graph &g, const Labeling &L) {
  NotSets out;
  std::vector<Label> lab = L.label;
  auto breaks = [&](vertex_t v, Label as) {
    const Label old = lab[v];
    lab[v] = as;
    bool bad = !detail::vertex_valid(g, lab, v);
    for (vertex_t u : g.neighbors(v))
      bad = bad || !detail::vertex_valid(g, lab, u);
    lab[v] = old;
    return bad;
  };
  for (vertex_t v = 0; v < g.n(); ++v) {
    if (!g.alive(v) || !is_open(lab[v]))
      continue;
    if (breaks(v, Label::Ge))
      out.not_g.push_back(v);
    if (breaks(v, Label::Ke))
      out.not_k.push_back(v);
  }
  return out;
}

/// k - |W| - |Ke|/2 - |Ge|/2.
inline MeasureValue measure_simple(int k, const Labeling &L) {
  const auto half = MeasureValue::from_raw(MeasureValue::scale / 2);
  return MeasureValue::from_int(k) - MeasureValue::from_int(L.count(Label::W)) -
         half * (L.count(Label::Ke) + L.count(Label::Ge));
}

/// k - |W| - |Ge_i| - wl(|Ke_a|+|Ge_a|) - wn(|NotG|+|NotK|), using the
/// activity flags stored in L.
inline MeasureValue measure_mc(int k, const Labeling &L, const Weights &w) {
  int wild = 0, ge_i = 0, loose = 0, nots = 0;
  for (vertex_t v = 0; v < L.n(); ++v) {
    switch (L.label[v]) {
    case Label::W:
      ++wild;
      break;
    case Label::Ge:
      (L.active[v] ? loose : ge_i) += 1;
      break;
    case Label::Ke:
      loose += L.active[v];
      break;
    case Label::NotG:
    case Label::NotK:
      ++nots;
      break;
    default:
      break;
    }
  }
  return MeasureValue::from_int(k - wild - ge_i) - w.omega_l * loose -
         w.omega_n * nots;
}

/// Whether L2 extends L in the labeling order. NotG/NotK may stay as they
/// are, which keeps the order reflexive.
inline bool extends(const Labeling &L, const Labeling &L2) {
  if (L.n() != L2.n())
    throw std::invalid_argument("labelings of different graphs");
  for (vertex_t v = 0; v < L.n(); ++v) {
    const Label a = L.label[v], b = L2.label[v];
    switch (a) {
    case Label::Ki:
    case Label::Ke:
    case Label::Ge:
    case Label::W:
      if (b != a)
        return false;
      break;
    case Label::NotG:
      if (b != Label::NotG && b != Label::W && b != Label::Ke)
        return false;
      break;
    case Label::NotK:
      if (b != Label::NotK && b != Label::W && b != Label::Ge)
        return false;
      break;
    case Label::Unlabeled:
      break;
    }
    if (L2.active[v] && !L.active[v])
      return false;
  }
  return true;
}

/// Complete labeling certifying an irredundant set I.
inline Labeling labeling_of_solution(const Graph &g, const vertex_list &I) {
  const auto cert = certify(g, I); // throws if I is not irredundant
  Labeling L(g.n());
  for (vertex_t v = 0; v < g.n(); ++v)
    L.label[v] = Label::W;
  for (const auto &c : cert) {
    if (c.garden) {
      L.label[c.king] = Label::Ke;
      L.label[*c.garden] = Label::Ge;
    } else {
      L.label[c.king] = Label::Ki;
    }
  }
  L.refresh(g);
  return L;
}

} // namespace irred

#endif

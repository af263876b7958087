#ifndef IRRED_UNDO_LOG_HPP
#define IRRED_UNDO_LOG_HPP

#include <cstddef>
#include <type_traits>
#include <variant>
#include <vector>

#include "graph.hpp"
#include "labeling.hpp"

namespace irred {

/** \brief Ordered record of reversible mutations on a Graph and Labeling. */
class UndoLog {
public:
  struct EdgeRemoved {
    vertex_t u, v;
  };
  struct VertexKilled {
    vertex_t v;
    vertex_list nbrs;
  };
  struct LabelChanged {
    vertex_t v;
    Label old;
    bool old_active;
    vertex_t old_partner;
  };
  using Entry = std::variant<EdgeRemoved, VertexKilled, LabelChanged>;

  std::size_t mark() const { return log_.size(); }
  std::size_t size() const { return log_.size(); }

  bool remove_edge(Graph &g, vertex_t u, vertex_t v) {
    if (!g.remove_edge(u, v))
      return false;
    log_.push_back(EdgeRemoved{u, v});
    return true;
  }

  void kill_vertex(Graph &g, vertex_t v) {
    log_.push_back(VertexKilled{v, g.kill_vertex(v)});
  }

  void set_label(Labeling &L, vertex_t v, Label l) {
    log_.push_back(LabelChanged{v, L.label[v], L.active[v], L.partner[v]});
    L.label[v] = l;
  }

  // Undo every mutation after mark, newest first.
  void rollback(std::size_t to, Graph &g, Labeling *L = nullptr) {
    while (log_.size() > to) {
      std::visit(
          [&](auto &e) {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, EdgeRemoved>) {
              g.add_edge(e.u, e.v);
            } else if constexpr (std::is_same_v<T, VertexKilled>) {
              g.revive_vertex(e.v, e.nbrs);
            } else {
              if (L) {
                L->label[e.v] = e.old;
                L->active[e.v] = e.old_active;
                L->partner[e.v] = e.old_partner;
              }
            }
          },
          log_.back());
      log_.pop_back();
    }
  }

private:
  std::vector<Entry> log_;
};

} // namespace irred

#endif

#ifndef IRRED_JSON_IO_HPP
#define IRRED_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "analysis.hpp"
#include "bit_state.hpp"
#include "graph.hpp"
#include "harness.hpp"
#include "kernel.hpp"
#include "labeling.hpp"

namespace irred {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline json to_json(const Graph &g) {
  json edges = json::array();
  for (auto [u, v] : g.edges())
    edges.push_back({u, v});
  return {{"n", g.alive_count()}, {"m", g.edge_count()}, {"edges", edges}};
}

/// {"labels": {id: name}, "active": [ids], "partner": [[king, garden]]}
inline json to_json(const Labeling &L) {
  json labels = json::object(), active = json::array(), pairs = json::array();
  for (vertex_t v = 0; v < L.n(); ++v) {
    labels[std::to_string(v)] = std::string(label_name(L.label[v]));
    if (L.active[v])
      active.push_back(v);
    if (L.partner[v] >= 0 && L.label[v] == Label::Ke)
      pairs.push_back({v, L.partner[v]});
  }
  return {{"labels", labels}, {"active", active}, {"partner", pairs}};
}

inline json to_json(const SearchStats &s) {
  json rules = json::object();
  for (const auto &[name, c] : s.ruleFirings)
    rules[name] = c;
  return {{"nodes", s.nodes},
          {"maxDepth", s.maxDepth},
          {"prunes", s.prunes},
          {"measureIncreases", s.measureIncreases},
          {"ruleFirings", rules}};
}

inline json to_json(const KernelOutcome &k, int n_before) {
  return {{"verdict", verdict_name(k.verdict)},
          {"n_before", n_before},
          {"n_after", k.graph.alive_count()},
          {"k_after", k.k},
          {"forced", k.forced}};
}

inline json to_json(const ChainValues &c) {
  return {{"ir", c.ir}, {"gamma", c.gamma}, {"alpha", c.alpha}, {"IR", c.IR}};
}

inline json to_json(const CampaignReport &r, bool timing = true) {
  json mism = json::array();
  for (const auto &m : r.mismatches)
    mism.push_back({{"graph", m.graph},
                    {"k", m.k},
                    {"check", m.check},
                    {"expected", m.expected},
                    {"got", m.got}});
  json nodes = json::object();
  for (bool mc : {false, true}) {
    json per_k = json::object();
    for (const auto &[k, p] : r.node_percentiles(mc))
      per_k[std::to_string(k)] = {
          {"count", p.count}, {"p50", p.p50}, {"p90", p.p90}, {"max", p.max}};
    nodes[mc ? "mc" : "simple"] = per_k;
  }
  json out = {{"instances", r.instances},
              {"decisions", r.decisions},
              {"mismatches", mism},
              {"violations", r.violations},
              {"prunesChecked", r.prunes_checked},
              {"nodeStats", nodes}};
  if (timing)
    out["wallTime"] = r.wallTime;
  return out;
}

inline json to_json(const analysis::Alg1Report &r) {
  json cases = json::array();
  for (const auto &c : r.cases)
    cases.push_back({{"case", c.name}, {"value", c.value}, {"ok", c.ok}});
  return {{"alpha", r.constants.alpha},
          {"beta", r.constants.beta},
          {"cases", cases},
          {"case3TailDecreasing", r.case3_tail_decreasing},
          {"case4TailDecreasing", r.case4_tail_decreasing},
          {"passed", r.passed}};
}

inline json to_json(const analysis::Alg2Report &r) {
  json rows = json::array(), tails = json::array();
  for (const auto &row : r.rows) {
    json e = {{"case", row.name}, {"vector", row.vector},
              {"branchingNumber", row.number}, {"objective", row.objective}};
    if (row.i)
      e["i"] = row.i;
    rows.push_back(e);
  }
  for (const auto &t : r.tails) {
    json f = json::object();
    for (auto [i, v] : t.f)
      f[std::to_string(i)] = v;
    tails.push_back({{"case", t.name},
                     {"f", f},
                     {"decreasingFrom4", t.decreasing_from_4},
                     {"allBelowOne", t.all_below_one}});
  }
  return {{"wl", r.wl},         {"wn", r.wn},       {"target", r.target},
          {"max", r.max_number}, {"argmax", r.argmax}, {"saddle3", r.saddle3},
          {"rows", rows},        {"tails", tails},   {"passed", r.passed}};
}

} // namespace irred

#endif

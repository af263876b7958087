#ifndef IRRED_HARNESS_HPP
#define IRRED_HARNESS_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "bit_state.hpp"
#include "bits.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "kernel.hpp"
#include "oracle.hpp"
#include "solver_mc.hpp"
#include "solver_simple.hpp"

namespace irred {

enum class Algo { Simple, Mc };

inline Algo algo_from_string(const std::string &s) {
  if (s == "simple")
    return Algo::Simple;
  if (s == "mc")
    return Algo::Mc;
  throw std::invalid_argument("unknown algorithm: " + s);
}

inline constexpr double kMcThreshold = 0.6;
inline constexpr double kSimpleThreshold = 0.514748;

struct DriverOptions {
  Algo algo = Algo::Mc;
  double threshold = -1; // negative: the default for algo
  Weights weights{};
  bool use_kernel = true;

  double effective_threshold() const {
    if (threshold >= 0)
      return threshold;
    return algo == Algo::Mc ? kMcThreshold : kSimpleThreshold;
  }
};

struct DriverResult {
  int value = 0;
  std::uint64_t nodes = 0;
  int decisions = 0;     // parameterized decisions made
  bool enumerated = false; // answer came from subset enumeration
};

/// IR(g) >= n-k, going through the crown kernel first.
inline SearchResult decide_comaxir(const Graph &g, int k,
                                   const DriverOptions &opt,
                                   mc::Solver *shared = nullptr) {
  Graph h = g;
  int k2 = k;
  if (opt.use_kernel) {
    KernelOutcome ko = kernel_comaxir(g, k);
    if (ko.verdict != KernelVerdict::Reduced)
      return {ko.verdict == KernelVerdict::Yes, {}};
    h = ko.graph;
    k2 = ko.k;
  }
  if (h.alive_count() != h.n())
    h = h.compacted().first;
  if (opt.algo == Algo::Simple)
    return decide_comaxir_simple(h, k2);
  if (shared)
    return shared->decide(adjacency_masks(h), k2);
  return decide_comaxir_mc(h, k2, opt.weights);
}

/// IR(g) as n minus the least k with a YES answer. Once k passes
/// threshold*n, the remaining sets have at most n-k elements and are
/// enumerated directly.
inline DriverResult upper_ir(const Graph &g, const DriverOptions &opt = {}) {
  const Graph h = g.alive_count() == g.n() ? g : g.compacted().first;
  const int n = h.n();
  const double t = opt.effective_threshold();
  mc::Solver solver(McOptions{opt.weights});
  DriverResult r;
  for (int k = 0; k <= n; ++k) {
    if (k > t * n) {
      r.value = oracle::max_irredundant_upto(adjacency_masks(h), n - k);
      r.enumerated = true;
      return r;
    }
    const SearchResult s = decide_comaxir(h, k, opt, &solver);
    r.nodes += s.stats.nodes;
    ++r.decisions;
    if (s.answer) {
      r.value = n - k;
      return r;
    }
  }
  throw std::logic_error("upper_ir: no k accepted");
}

inline int compute_upper_ir(const Graph &g, const DriverOptions &opt = {}) {
  return upper_ir(g, opt).value;
}

/// ir(g) as the least size of a maximal irredundant set. Small sizes are
/// enumerated, larger ones go through the exact parameterized search with
/// k = n - size. The counting kernel caps the answer.
inline DriverResult lower_ir(const Graph &g, const DriverOptions &opt = {}) {
  const Graph h = g.alive_count() == g.n() ? g : g.compacted().first;
  const int n = h.n();
  const double t = opt.threshold >= 0 ? opt.threshold : kSimpleThreshold;
  const auto adj = adjacency_masks(h);
  int cap = n;
  if (opt.use_kernel) {
    const int nonisolated = kernel_cominmaxir(h, 0).graph.alive_count();
    cap = n - nonisolated / 2; // kernel answers YES for k = nonisolated/2
  }
  DriverResult r;
  for (int size = 0; size < cap; ++size) {
    bool yes;
    if (size < (1 - t) * n) {
      yes = oracle::has_maximal_irredundant_of_size(adj, size);
      r.enumerated = true;
    } else {
      const SearchResult s = search_simple(h, n - size, SimpleMode::ExactCoMinMaxIR);
      r.nodes += s.stats.nodes;
      ++r.decisions;
      yes = s.answer;
    }
    if (yes) {
      r.value = size;
      return r;
    }
  }
  r.value = cap;
  return r;
}

inline int compute_ir(const Graph &g, const DriverOptions &opt = {}) {
  return lower_ir(g, opt).value;
}

/// G(n, p) from mt19937_64: pair (u, v), u < v in lexicographic order, is an
/// edge when the next 53-bit uniform draw is below p.
inline Graph gen_random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0)
    throw std::invalid_argument("n must be nonnegative");
  if (!(p >= 0 && p <= 1))
    throw std::invalid_argument("p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p)
        g.add_edge(u, v);
    }
  return g;
}

// ---------------------------------------------------------------------------
// Verification campaign

struct Mismatch {
  std::string graph; // graph6
  int k = -1;        // -1 for whole-instance checks
  std::string check;
  std::string expected;
  std::string got;
};

struct NodeSample {
  int n = 0, k = 0;
  std::uint64_t simple = 0, mc = 0;
};

struct Percentiles {
  std::uint64_t p50 = 0, p90 = 0, max = 0;
  std::size_t count = 0;
};

struct CampaignReport {
  long instances = 0;
  long decisions = 0;
  std::vector<Mismatch> mismatches;
  std::vector<NodeSample> samples;
  // violations by invariant name; every key is present even when zero
  std::map<std::string, long> violations;
  long prunes_checked = 0;
  long kernel_size_checks = 0;
  double wallTime = 0;

  std::map<int, Percentiles> node_percentiles(bool mc) const {
    std::map<int, std::vector<std::uint64_t>> by_k;
    for (const auto &s : samples)
      by_k[s.k].push_back(mc ? s.mc : s.simple);
    std::map<int, Percentiles> out;
    for (auto &[k, v] : by_k) {
      std::sort(v.begin(), v.end());
      auto at = [&v](double q) {
        return v[std::min(v.size() - 1, static_cast<std::size_t>(q * v.size()))];
      };
      out[k] = {at(0.5), at(0.9), v.back(), v.size()};
    }
    return out;
  }

  long total_violations() const {
    long t = 0;
    for (const auto &[name, c] : violations)
      t += c;
    return t;
  }
};

struct CampaignOptions {
  int exhaustive_n = 6; // every labeled graph up to this order
  int max_n = 12;       // random instances have 1..max_n vertices
  int trials = 0;
  std::uint64_t seed = 42;
  unsigned threads = 0; // 0: hardware concurrency
  McFault fault = McFault::None;
  bool check_prunes = true;     // exhaustive completion, only for n <= 6
  bool check_drivers = true;    // compute_ir / compute_upper_ir per instance
  bool exhaustive_only_small = false;
};

inline const std::vector<std::string> &invariant_names() {
  static const std::vector<std::string> names{
      "prune-simple", "prune-mc", "notG-neighbors", "notG-degree",
      "GEKE",         "NGE",      "measure-increase", "active-set",
      "kernel-size-2k-1", "kernel-size-3k", "chain"};
  return names;
}

namespace detail {

// Allowed final labels for each current label.
inline std::vector<Label> completions(Label l) {
  switch (l) {
  case Label::Unlabeled:
    return {Label::Ki, Label::Ke, Label::Ge, Label::W};
  case Label::NotG:
    return {Label::Ke, Label::W};
  case Label::NotK:
    return {Label::Ge, Label::W};
  default:
    return {l};
  }
}

/// Whether some complete labeling extending s is valid on base and costs
/// at most k, i.e. whether a prune at s would lose a solution.
inline bool completion_exists(const BitState &s, int k,
                              const std::vector<mask_t> &base) {
  const int n = s.n();
  std::vector<Label> lab(n);
  std::array<mask_t, 7> sets{};
  auto valid = [&]() {
    const mask_t ki = sets[static_cast<int>(Label::Ki)],
                 ke = sets[static_cast<int>(Label::Ke)],
                 ge = sets[static_cast<int>(Label::Ge)],
                 wild = sets[static_cast<int>(Label::W)];
    for (int v = 0; v < n; ++v) {
      const mask_t nb = base[v];
      if ((ki & bit(v)) && (nb & ~wild))
        return false;
      if ((ke & bit(v)) && popcount(nb & ge) != 1)
        return false;
      if ((ge & bit(v)) && popcount(nb & ke) != 1)
        return false;
    }
    return true;
  };
  auto rec = [&](auto &&self, int v, int cost) -> bool {
    if (cost > k)
      return false;
    if (v == n)
      return valid();
    for (Label l : completions(s.label(v))) {
      sets[static_cast<int>(l)] |= bit(v);
      const bool hit =
          self(self, v + 1, cost + (l == Label::W || l == Label::Ge));
      sets[static_cast<int>(l)] &= ~bit(v);
      if (hit)
        return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

// Reduced-state structure after an M&C reduction fixpoint.
inline void check_mc_fixpoint(const BitState &s,
                              std::map<std::string, long> &viol) {
  const mask_t U = s.set(Label::Unlabeled), NG = s.set(Label::NotG),
               NK = s.set(Label::NotK), KE = s.set(Label::Ke),
               GE = s.set(Label::Ge);
  const mask_t ke_a = s.ke_active(), ge_a = s.ge_active();
  for_each_bit(NG | NK, [&](int v) {
    if (popcount(s.adj(v) & (GE | KE)) > 1)
      ++viol["notG-neighbors"];
    if (s.degree(v) < 2)
      ++viol["notG-degree"];
  });
  for_each_bit(ke_a, [&](int v) {
    if (s.adj(v) & ge_a)
      ++viol["GEKE"];
    if (s.adj(v) & ~(U | NK))
      ++viol["NGE"];
  });
  for_each_bit(ge_a, [&](int v) {
    if (s.adj(v) & ~(U | NG))
      ++viol["NGE"];
  });
  // the derived active set against the formula, recomputed independently
  mask_t formula = U | NG | NK;
  for (int v = 0; v < s.n(); ++v) {
    if ((KE & bit(v)) && !(s.adj(v) & GE))
      formula |= bit(v);
    if ((GE & bit(v)) && !(s.adj(v) & KE))
      formula |= bit(v);
  }
  if (formula != s.active())
    ++viol["active-set"];
}

struct TaskResult {
  long decisions = 0;
  std::vector<Mismatch> mismatches;
  std::vector<NodeSample> samples;
  std::map<std::string, long> violations;
  long prunes_checked = 0;
  long kernel_size_checks = 0;
};

inline std::string yn(bool b) { return b ? "YES" : "NO"; }

inline TaskResult run_instance(const Graph &g, const CampaignOptions &opt) {
  TaskResult out;
  const int n = g.n();
  const std::string code = encode_graph(g, GraphFormat::Graph6);
  const ChainValues ch = domination_chain(g);
  auto miss = [&](int k, std::string check, std::string want, std::string got) {
    out.mismatches.push_back({code, k, std::move(check), std::move(want),
                              std::move(got)});
  };

  const bool prunes = opt.check_prunes && n <= 6;
  SearchObserver simple_obs, mc_obs;
  if (prunes) {
    simple_obs.on_prune = [&](const BitState &s, int k,
                              const std::vector<mask_t> &base) {
      ++out.prunes_checked;
      if (completion_exists(s, k, base))
        ++out.violations["prune-simple"];
    };
    mc_obs.on_prune = [&](const BitState &s, int k,
                          const std::vector<mask_t> &base) {
      ++out.prunes_checked;
      if (completion_exists(s, k, base))
        ++out.violations["prune-mc"];
    };
  }
  mc_obs.on_fixpoint = [&](const BitState &s) {
    check_mc_fixpoint(s, out.violations);
  };

  const auto adj = adjacency_masks(g);
  for (int k = 0; k <= n; ++k) {
    ++out.decisions;
    const bool want_max = ch.IR >= n - k;
    const bool want_exact = ch.ir == n - k;

    const SearchResult a =
        search_simple(g, k, SimpleMode::CoMaxIR, &simple_obs);
    mc::Solver solver(McOptions{Weights::standard(), true, opt.fault}, &mc_obs);
    const SearchResult b = solver.decide(adj, k);
    const SearchResult c = decide_exact_cominmaxir(g, k, &simple_obs);
    out.violations["measure-increase"] += b.stats.measureIncreases;
    if (a.answer != want_max)
      miss(k, "comaxir-simple", yn(want_max), yn(a.answer));
    if (b.answer != want_max)
      miss(k, "comaxir-mc", yn(want_max), yn(b.answer));
    if (c.answer != want_exact)
      miss(k, "exact-cominmaxir", yn(want_exact), yn(c.answer));
    out.samples.push_back({n, k, a.stats.nodes, b.stats.nodes});

    // crown kernel
    const KernelOutcome k2 = kernel_comaxir(g, k);
    if (k2.verdict == KernelVerdict::Reduced) {
      ++out.kernel_size_checks;
      if (k2.graph.alive_count() > 3 * k2.k)
        ++out.violations["kernel-size-3k"];
      const Graph kg = k2.graph.compacted().first;
      const bool got = domination_chain(kg).IR >= kg.n() - k2.k;
      if (got != want_max)
        miss(k, "kernel-comaxir", yn(want_max), "Reduced:" + yn(got));
    } else if ((k2.verdict == KernelVerdict::Yes) != want_max) {
      miss(k, "kernel-comaxir", yn(want_max), verdict_name(k2.verdict));
    }
    // counting kernel: "ir <= n-k"
    const bool want_min = ch.ir <= n - k;
    const KernelOutcome k1 = kernel_cominmaxir(g, k);
    if (k1.verdict == KernelVerdict::Reduced) {
      ++out.kernel_size_checks;
      if (k1.graph.alive_count() > 2 * k - 1)
        ++out.violations["kernel-size-2k-1"];
      const Graph kg = k1.graph.compacted().first;
      const bool got = domination_chain(kg).ir <= kg.n() - k1.k;
      if (got != want_min)
        miss(k, "kernel-cominmaxir", yn(want_min), "Reduced:" + yn(got));
    } else if ((k1.verdict == KernelVerdict::Yes) != want_min) {
      miss(k, "kernel-cominmaxir", yn(want_min), verdict_name(k1.verdict));
    }
  }

  if (opt.check_drivers) {
    for (Algo algo : {Algo::Mc, Algo::Simple}) {
      DriverOptions d;
      d.algo = algo;
      const int up = compute_upper_ir(g, d);
      if (up != ch.IR)
        miss(-1, algo == Algo::Mc ? "upper-ir-mc" : "upper-ir-simple",
             std::to_string(ch.IR), std::to_string(up));
    }
    const int lo = compute_ir(g);
    if (lo != ch.ir)
      miss(-1, "ir", std::to_string(ch.ir), std::to_string(lo));
    if (!(lo <= ch.gamma && ch.gamma <= ch.alpha && ch.alpha <= ch.IR))
      ++out.violations["chain"];
  }
  return out;
}

} // namespace detail

/// Exhaustive sweep over all labeled graphs up to exhaustive_n vertices,
/// then random G(n, p) trials, each compared against the oracle for every k.
inline CampaignReport verify_campaign(const CampaignOptions &opt) {
  if (opt.max_n > 14 || opt.exhaustive_n > 6)
    throw std::invalid_argument("campaign orders exceed oracle range");
  const auto start = std::chrono::steady_clock::now();

  std::vector<Graph> instances;
  for (int n = 1; n <= opt.exhaustive_n; ++n) {
    std::vector<edge_t> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        pairs.emplace_back(u, v);
    const long total = 1L << pairs.size();
    for (long code = 0; code < total; ++code) {
      Graph g(n);
      for (std::size_t e = 0; e < pairs.size(); ++e)
        if (code >> e & 1)
          g.add_edge(pairs[e].first, pairs[e].second);
      instances.push_back(std::move(g));
    }
  }
  std::mt19937_64 rng(opt.seed);
  for (int t = 0; t < opt.trials; ++t) {
    const int n = 1 + static_cast<int>(rng() % opt.max_n);
    const double p = 0.1 + 0.1 * static_cast<double>(rng() % 9);
    instances.push_back(gen_random_graph(n, p, rng()));
  }

  CampaignReport rep;
  for (const auto &name : invariant_names())
    rep.violations[name] = 0;
  std::vector<detail::TaskResult> results(instances.size());
  std::atomic<std::size_t> next{0};
  unsigned threads = opt.threads ? opt.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, threads);
  auto worker = [&] {
    for (std::size_t i; (i = next++) < instances.size();)
      results[i] = detail::run_instance(instances[i], opt);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back(worker);
  for (auto &th : pool)
    th.join();

  // merged in instance order, so the report does not depend on scheduling
  for (auto &r : results) {
    ++rep.instances;
    rep.decisions += r.decisions;
    rep.prunes_checked += r.prunes_checked;
    rep.kernel_size_checks += r.kernel_size_checks;
    for (auto &m : r.mismatches)
      rep.mismatches.push_back(std::move(m));
    rep.samples.insert(rep.samples.end(), r.samples.begin(), r.samples.end());
    for (const auto &[name, c] : r.violations)
      rep.violations[name] += c;
  }
  rep.wallTime = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                               start)
                     .count();
  return rep;
}

inline CampaignReport verify_campaign(int max_n, int trials, std::uint64_t seed) {
  CampaignOptions opt;
  opt.max_n = max_n;
  opt.trials = trials;
  opt.seed = seed;
  opt.exhaustive_n = std::min(6, max_n);
  return verify_campaign(opt);
}

} // namespace irred

#endif

// Command-line front end for the irredundance solvers.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <irred/analysis.hpp>
#include <irred/graph_io.hpp>
#include <irred/harness.hpp>
#include <irred/json_io.hpp>
#include <irred/kernel.hpp>
#include <irred/oracle.hpp>
#include <irred/solver_mc.hpp>
#include <irred/solver_simple.hpp>

using namespace irred;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string input = "-";
  std::string format = "edge-list";
  bool json = false;
  std::uint64_t seed = 1;
  std::string algo = "mc";
  int k = -1;
  std::string wl = "0.7455", wn = "0.2455";
  unsigned threads = 0;
};

void add_common(CLI::App *app, Common &c) {
  app->add_option("--input", c.input, "graph file, '-' for stdin");
  app->add_option("--format", c.format, "edge-list or graph6")
      ->check(CLI::IsMember({"edge-list", "graph6"}));
  app->add_flag("--json", c.json, "print JSON");
  app->add_option("--seed", c.seed);
  app->add_option("--algo", c.algo)->check(CLI::IsMember({"simple", "mc"}));
  app->add_option("--k", c.k);
  app->add_option("--wl", c.wl, "weight of active kings and gardens");
  app->add_option("--wn", c.wn, "weight of NotG/NotK vertices");
  app->add_option("--threads", c.threads);
}

Graph read_graph(const Common &c) {
  std::string text;
  if (c.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(c.input);
    if (!in)
      throw usage_error("cannot open " + c.input);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_graph(text, format_from_string(c.format));
}

Weights weights(const Common &c) {
  try {
    return Weights::make(MeasureValue::parse(c.wl), MeasureValue::parse(c.wn));
  } catch (const std::invalid_argument &e) {
    throw usage_error(e.what());
  }
}

int need_k(const Common &c) {
  if (c.k < 0)
    throw usage_error("--k is required and must be nonnegative");
  return c.k;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void emit(const Common &c, json j, const std::string &text) {
  if (c.json) {
    j["schemaVersion"] = kSchemaVersion;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

int run_ir(const Common &c, bool upper, double threshold) {
  const Graph g = read_graph(c);
  DriverOptions opt;
  opt.algo = algo_from_string(c.algo);
  opt.weights = weights(c);
  opt.threshold = threshold;
  const auto t0 = std::chrono::steady_clock::now();
  const DriverResult r = upper ? upper_ir(g, opt) : lower_ir(g, opt);
  const double ms = ms_since(t0);
  const char *name = upper ? "IR" : "ir";
  emit(c,
       {{name, r.value},
        {"n", g.alive_count()},
        {"nodes", r.nodes},
        {"decisions", r.decisions},
        {"enumerated", r.enumerated},
        {"timeMs", ms}},
       std::string(name) + " = " + std::to_string(r.value) + "\n");
  return 0;
}

int run_decide(const Common &c, const std::string &problem) {
  const Graph g = read_graph(c);
  const int k = need_k(c);
  const auto t0 = std::chrono::steady_clock::now();
  SearchResult r;
  if (problem == "exact-co-minmaxir") {
    if (c.algo != "simple")
      throw usage_error("exact-co-minmaxir needs --algo simple");
    r = decide_exact_cominmaxir(g, k);
  } else if (c.algo == "simple") {
    r = decide_comaxir_simple(g, k);
  } else {
    r = decide_comaxir_mc(g, k, weights(c));
  }
  const double ms = ms_since(t0);
  json j = {{"answer", r.answer ? "YES" : "NO"},
            {"nodes", r.stats.nodes},
            {"maxDepth", r.stats.maxDepth}};
  if (c.algo == "mc")
    j["ruleFirings"] = to_json(r.stats)["ruleFirings"];
  j["timeMs"] = ms;
  emit(c, j, std::string(r.answer ? "YES" : "NO") + "\n");
  return 0;
}

int run_kernel(const Common &c, const std::string &problem) {
  const Graph g = read_graph(c);
  const int k = need_k(c);
  const KernelOutcome o = problem == "co-minmaxir" ? kernel_cominmaxir(g, k)
                                                   : kernel_comaxir(g, k);
  std::ostringstream os;
  os << verdict_name(o.verdict) << " n'=" << o.graph.alive_count()
     << " k'=" << o.k << '\n';
  emit(c, to_json(o, g.alive_count()), os.str());
  return 0;
}

int run_oracle(const Common &c) {
  const Graph g = read_graph(c);
  const ChainValues v = domination_chain(g);
  std::ostringstream os;
  os << "ir=" << v.ir << " gamma=" << v.gamma << " alpha=" << v.alpha
     << " IR=" << v.IR << '\n';
  emit(c, to_json(v), os.str());
  return 0;
}

struct AnalyzeArgs {
  std::string check = "alg2";
  double alpha = 3.841;
  double target = 3.069;
  double claimed = 1.99914;
  double tolerance = 1e-3;
  double step = 1e-3;
  double tilde_wl = 1.13, tilde_wn = 0.08; // vertex-count measure weights
};

int run_analyze(const Common &c, const AnalyzeArgs &a) {
  std::ostringstream os;
  os.precision(16);
  json j;
  bool ok = true;
  if (a.check == "alg1") {
    const auto r = analysis::verify_alg1(a.alpha);
    for (const auto &cs : r.cases)
      os << cs.name << '\t' << cs.value << (cs.ok ? "" : "\tFAIL") << '\n';
    j = to_json(r);
    ok = r.passed;
  } else if (a.check == "alg2") {
    const Weights w = weights(c);
    const auto r = analysis::verify_alg2(w.omega_l.to_double(),
                                         w.omega_n.to_double(), a.target);
    for (const auto &row : r.rows)
      os << row.name << (row.i ? " i=" + std::to_string(row.i) : "") << '\t'
         << row.number << (row.objective ? "" : "\t(comparison)") << '\n';
    os << "max " << r.max_number << " at " << r.argmax << '\n';
    j = to_json(r);
    ok = r.passed;
  } else if (a.check == "winwin") {
    const auto r = analysis::verify_winwin(a.alpha, a.claimed, a.tolerance);
    os << "threshold " << r.threshold << " base " << r.base << '\n';
    j = {{"threshold", r.threshold}, {"base", r.base}, {"passed", r.passed}};
    ok = r.passed;
  } else if (a.check == "optimize") {
    const auto r = analysis::optimize_weights(a.step);
    os << "wl " << r.wl << " wn " << r.wn << " objective " << r.objective
       << '\n';
    j = {{"wl", r.wl}, {"wn", r.wn}, {"objective", r.objective},
         {"evaluated", r.evaluated}};
  } else {
    const auto at = analysis::conclusion_measure(a.tilde_wl, a.tilde_wn);
    const auto best = analysis::optimize_conclusion(a.step);
    os << "base " << at.base << " (alternate sign " << at.case_1c_alt
       << "); free optimum " << best.base << " at " << best.wl << ", "
       << best.wn << '\n';
    j = {{"wl", at.wl},
         {"wn", at.wn},
         {"base", at.base},
         {"baseAltSign", at.case_1c_alt},
         {"freeOptimum", {{"wl", best.wl}, {"wn", best.wn}, {"base", best.base}}}};
  }
  emit(c, j, os.str());
  return ok ? 0 : 1;
}

int run_gen(const Common &c, int n, double p) {
  const Graph g = gen_random_graph(n, p, c.seed);
  if (c.json)
    emit(c, to_json(g), "");
  else {
    std::string out = encode_graph(g, format_from_string(c.format));
    if (out.empty() || out.back() != '\n')
      out += '\n';
    std::cout << out;
  }
  return 0;
}

struct VerifyArgs {
  int max_n = 12;
  int trials = 0;
  int exhaustive_n = 6;
  bool inject = false;
  std::vector<std::string> ignore;
};

int run_verify(const Common &c, const VerifyArgs &v) {
  CampaignOptions opt;
  opt.max_n = v.max_n;
  opt.trials = v.trials;
  opt.exhaustive_n = v.exhaustive_n;
  opt.seed = c.seed;
  opt.threads = c.threads;
  if (v.inject)
    opt.fault = McFault::IsolatedToWilderness;
  CampaignReport r;
  try {
    r = verify_campaign(opt);
  } catch (const std::invalid_argument &e) {
    throw usage_error(e.what());
  }
  long counted = 0;
  std::ostringstream os;
  os << r.instances << " instances, " << r.decisions << " decisions, "
     << r.mismatches.size() << " mismatches\n";
  for (const auto &[name, n] : r.violations) {
    const bool ignored =
        std::find(v.ignore.begin(), v.ignore.end(), name) != v.ignore.end();
    if (!ignored)
      counted += n;
    os << "  " << name << ": " << n << (ignored && n ? " (ignored)" : "")
       << '\n';
  }
  for (const auto &m : r.mismatches)
    os << "  mismatch " << m.graph << " k=" << m.k << " " << m.check
       << " expected " << m.expected << " got " << m.got << '\n';
  emit(c, to_json(r), os.str());
  return r.mismatches.empty() && counted == 0 ? 0 : kExitInvariant;
}

int run_bench(const Common &c, int n, double p, int seeds, bool lower) {
  DriverOptions opt;
  opt.algo = algo_from_string(c.algo);
  opt.weights = weights(c);
  json rows = json::array();
  std::ostringstream os;
  os << "seed,n,p,value,nodes,decisions,seconds\n";
  for (int s = 0; s < seeds; ++s) {
    const std::uint64_t seed = c.seed + s;
    const Graph g = gen_random_graph(n, p, seed);
    const auto t0 = std::chrono::steady_clock::now();
    const DriverResult r = lower ? lower_ir(g, opt) : upper_ir(g, opt);
    const double sec = ms_since(t0) / 1000;
    rows.push_back({{"seed", seed},
                    {"value", r.value},
                    {"nodes", r.nodes},
                    {"decisions", r.decisions},
                    {"seconds", sec}});
    os << seed << ',' << n << ',' << p << ',' << r.value << ',' << r.nodes
       << ',' << r.decisions << ',' << sec << '\n';
  }
  emit(c,
       {{"quantity", lower ? "ir" : "IR"}, {"n", n}, {"p", p}, {"runs", rows}},
       os.str());
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact lower and upper irredundance numbers"};
  app.require_subcommand(1);
  Common c;
  std::string problem;
  double threshold = -1;
  int gen_n = 10, bench_seeds = 5;
  double gen_p = 0.3;
  bool bench_lower = false;
  AnalyzeArgs an;
  VerifyArgs ver;

  auto *ir = app.add_subcommand("ir", "lower irredundance number");
  auto *up = app.add_subcommand("upper-ir", "upper irredundance number");
  for (auto *s : {ir, up}) {
    add_common(s, c);
    s->add_option("--threshold", threshold,
                  "fraction of n beyond which sets are enumerated");
  }
  auto *dec = app.add_subcommand("decide", "parameterized decision");
  add_common(dec, c);
  dec->add_option("--problem", problem)
      ->check(CLI::IsMember({"co-maxir", "exact-co-minmaxir"}))
      ->default_val("co-maxir");
  auto *ker = app.add_subcommand("kernel", "apply a kernelization");
  add_common(ker, c);
  ker->add_option("--problem", problem)
      ->check(CLI::IsMember({"co-maxir", "co-minmaxir"}))
      ->default_val("co-maxir");
  auto *ora = app.add_subcommand("oracle", "brute-force domination chain");
  add_common(ora, c);
  auto *ana = app.add_subcommand("analyze", "check the running-time analysis");
  add_common(ana, c);
  ana->add_option("--check", an.check)
      ->check(CLI::IsMember({"alg1", "alg2", "winwin", "optimize", "conclusion"}));
  ana->add_option("--alpha", an.alpha);
  ana->add_option("--target", an.target);
  ana->add_option("--claimed", an.claimed);
  ana->add_option("--tolerance", an.tolerance);
  ana->add_option("--step", an.step);
  ana->add_option("--tilde-wl", an.tilde_wl, "conclusion check only");
  ana->add_option("--tilde-wn", an.tilde_wn, "conclusion check only");
  auto *gen = app.add_subcommand("gen", "random G(n, p)");
  add_common(gen, c);
  gen->add_option("--n", gen_n)->check(CLI::NonNegativeNumber);
  gen->add_option("--p", gen_p)->check(CLI::Range(0.0, 1.0));
  auto *vf = app.add_subcommand("verify", "oracle comparison campaign");
  add_common(vf, c);
  vf->add_option("--max-n", ver.max_n);
  vf->add_option("--trials", ver.trials);
  vf->add_option("--exhaustive-n", ver.exhaustive_n);
  vf->add_flag("--inject-fault", ver.inject, "run with a corrupted rule");
  vf->add_option("--ignore", ver.ignore, "invariants not counted for the exit code");
  auto *be = app.add_subcommand("bench", "time the exact drivers on G(n, p)");
  add_common(be, c);
  be->add_option("--n", gen_n);
  be->add_option("--p", gen_p)->check(CLI::Range(0.0, 1.0));
  be->add_option("--seeds", bench_seeds);
  be->add_flag("--lower", bench_lower, "time ir instead of IR");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*ir)
      return run_ir(c, false, threshold);
    if (*up)
      return run_ir(c, true, threshold);
    if (*dec)
      return run_decide(c, problem);
    if (*ker)
      return run_kernel(c, problem);
    if (*ora)
      return run_oracle(c);
    if (*ana)
      return run_analyze(c, an);
    if (*gen)
      return run_gen(c, gen_n, gen_p);
    if (*vf)
      return run_verify(c, ver);
    if (*be)
      return run_bench(c, gen_n, gen_p, bench_seeds, bench_lower);
  } catch (const usage_error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const parse_error &e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error &e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  }
  return 0;
}

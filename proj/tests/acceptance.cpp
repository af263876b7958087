// Acceptance run: one PASS/FAIL line per criterion A1..A9.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <irred/analysis.hpp>
#include <irred/harness.hpp>

using namespace irred;
namespace an = irred::analysis;

namespace {

int failures = 0;

void report(const char *id, bool ok, const std::string &detail) {
  std::printf("%s %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  failures += !ok;
}

std::string fmt(const char *f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

long count_checks(const CampaignReport &r, const std::vector<std::string> &names) {
  long c = 0;
  for (const auto &m : r.mismatches)
    for (const auto &n : names)
      c += m.check == n;
  return c;
}

} // namespace

int main() {
  // A1: exhaustive sweep. A2: random instances up to 14 vertices.
  CampaignOptions ex;
  ex.exhaustive_n = 6;
  ex.trials = 0;
  const CampaignReport a1 = verify_campaign(ex);

  CampaignOptions rnd;
  rnd.exhaustive_n = 0;
  rnd.max_n = 14;
  rnd.trials = 500;
  rnd.seed = 42;
  const CampaignReport a2 = verify_campaign(rnd);

  {
    const long bad = count_checks(
        a1, {"comaxir-simple", "comaxir-mc", "exact-cominmaxir"});
    report("A1", bad == 0 && a1.wallTime <= 900,
           std::to_string(a1.instances) + " graphs (n<=6), " +
               std::to_string(a1.decisions) + " k-values, " +
               std::to_string(bad) + " solver mismatches (want 0), " +
               fmt("%.1f s", a1.wallTime) + " (limit 900 s)");
  }
  {
    const long bad = count_checks(a2, {"kernel-comaxir", "kernel-cominmaxir"});
    const long size =
        a2.violations.at("kernel-size-2k-1") + a2.violations.at("kernel-size-3k");
    report("A2", bad == 0 && size == 0,
           std::to_string(a2.instances) + " random graphs (n<=14), " +
               std::to_string(a2.kernel_size_checks) + " reduced kernels, " +
               std::to_string(bad) + " outcome mismatches, " +
               std::to_string(size) + " size-bound violations (want 0)");
  }
  {
    const an::Alg1Report r = an::verify_alg1(3.841);
    const double want[] = {0.9138880316045346, 0.9645844017875586,
                           0.9576263068932915};
    double err = 0;
    for (int d = 2; d <= 4; ++d)
      err = std::max(err, std::abs(an::alg1_case3(r.constants, d) - want[d - 2]));
    double worst = 0;
    for (const auto &c : r.cases)
      worst = std::max(worst, c.value);
    report("A3", r.passed && err <= 1e-12,
           fmt("case3 f(2..4) max error %.2e (tol 1e-12), ", err) +
               fmt("largest case value %.6f (<= 1)", worst));
  }
  {
    const an::Alg2Report r = an::verify_alg2(0.7455, 0.2455, 3.069);
    const auto t0 = std::chrono::steady_clock::now();
    const an::WeightOptimum o = an::optimize_weights(1e-3);
    const bool ok = r.passed && o.objective <= 3.070;
    report("A4", ok,
           fmt("max branching number %.6f at ", r.max_number) + r.argmax +
               " (<= 3.069 + 1e-3), tails " + (r.passed ? "ok" : "not ok") +
               fmt("; optimum %.6f", o.objective) +
               fmt(" at wl=%.3f", o.wl) + fmt(" wn=%.3f", o.wn) +
               " (<= 3.070)" + fmt(", %.1f s", seconds_since(t0)));
  }
  {
    const an::WinWin s = an::verify_winwin(3.841, 1.99914, 1e-3);
    const an::WinWin m = an::verify_winwin(3.069, 1.96, 5e-3);
    const an::ConclusionReport at = an::conclusion_measure(1.13, 0.08);
    const an::ConclusionReport opt = an::optimize_conclusion(1e-3);
    const bool s_ok = s.passed && std::abs(s.threshold - 0.485252) <= 1e-5;
    const bool c_ok = std::abs(opt.base - 2.036) <= 5e-3;
    report("A5", s_ok && m.passed && c_ok,
           fmt("3.841 -> base %.6f", s.base) +
               fmt(" threshold %.6f", s.threshold) + (s_ok ? " ok" : " off") +
               fmt("; 3.069 -> base %.6f", m.base) +
               (m.passed ? " ok" : " off") +
               fmt("; conclusion optimum %.6f", opt.base) +
               fmt(" at (%.2f,", opt.wl) + fmt(" %.2f)", opt.wn) +
               " vs 2.036 +- 5e-3" + (c_ok ? " ok" : " off") +
               fmt(" [at stated weights (1.13, 0.08): %.4f]", at.base));
  }
  {
    const long v = a1.violations.at("prune-simple") + a1.violations.at("prune-mc");
    report("A6", v == 0 && a1.prunes_checked > 0,
           std::to_string(a1.prunes_checked) +
               " prunes checked by exhaustive completion, " +
               std::to_string(v) + " lost solutions (want 0)");
  }
  {
    long over_simple = 0, over_mc = 0, big = 0, mc_le = 0;
    for (const CampaignReport *r : {&a1, &a2})
      for (const auto &s : r->samples) {
        over_simple += s.simple > 1e3 * std::pow(3.841, s.k);
        over_mc += s.mc > 1e3 * std::pow(3.069, s.k);
        if (s.k >= 4) {
          ++big;
          mc_le += s.mc <= s.simple;
        }
      }
    const double frac = big ? static_cast<double>(mc_le) / big : 1.0;
    report("A7", over_simple == 0 && over_mc == 0 && frac >= 0.6,
           std::to_string(over_simple) + " simple / " + std::to_string(over_mc) +
               " mc samples above 1e3*base^k (want 0); mc <= simple on " +
               fmt("%.1f%%", 100 * frac) + " of " + std::to_string(big) +
               " samples with k>=4 (want >= 60%)");
  }
  {
    std::string detail;
    bool ok = true;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const Graph g = gen_random_graph(30, 0.3, seed);
      const auto t0 = std::chrono::steady_clock::now();
      const int v = compute_upper_ir(g);
      const double t = seconds_since(t0);
      ok = ok && t <= 120;
      detail += "IR=" + std::to_string(v) + fmt(" %.1fs ", t);
    }
    detail += "| ";
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const Graph g = gen_random_graph(24, 0.3, seed);
      const auto t0 = std::chrono::steady_clock::now();
      const int v = compute_ir(g);
      const double t = seconds_since(t0);
      ok = ok && t <= 120;
      detail += "ir=" + std::to_string(v) + fmt(" %.1fs ", t);
    }
    report("A8", ok, "G(30,0.3) and G(24,0.3), seeds 1-5, limit 120 s each: " + detail);
  }
  {
    const std::vector<std::string> names{"notG-neighbors", "notG-degree", "GEKE",
                                         "NGE", "measure-increase", "active-set"};
    long total = 0;
    std::string detail;
    for (const auto &n : names) {
      const long c = a1.violations.at(n) + a2.violations.at(n);
      total += c;
      detail += n + "=" + std::to_string(c) + " ";
    }
    report("A9", total == 0, detail + "(want all 0)");
  }
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

#ifndef IRRED_ANALYSIS_HPP
#define IRRED_ANALYSIS_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace irred::analysis {

inline constexpr double kSlack = 1e-9;

/// Unique x > 1 with sum x^-d = 1, by bisection to 1e-12.
inline double branching_number(const std::vector<double> &d) {
  if (d.empty())
    throw std::invalid_argument("empty branching vector");
  for (double x : d)
    if (!(x > 0))
      throw std::invalid_argument("nonpositive decrease");
  auto excess = [&](double x) {
    const double lx = std::log(x);
    double s = 0;
    for (double di : d)
      s += std::exp(-di * lx);
    return s - 1;
  };
  if (d.size() == 1)
    return 1.0;
  double lo = 1.0, hi = 2.0;
  while (excess(hi) > 0) {
    lo = hi;
    hi *= 2;
    if (!std::isfinite(hi))
      return std::numeric_limits<double>::infinity();
  }
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi)
      break; // spacing of doubles reached
    (excess(mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// sum x^-d <= 1 is equivalent to branching_number(d) <= x.
inline bool within(const std::vector<double> &d, double x) {
  const double lx = std::log(x);
  double s = 0;
  for (double di : d)
    s += std::exp(-di * lx);
  return s <= 1 + 1e-15;
}

// ---------------------------------------------------------------------------
// Simple algorithm

struct Alg1Constants {
  double alpha;
  double beta;
  explicit Alg1Constants(double a)
      : alpha(a), beta(std::pow(a, -1.0) + std::pow(a, -0.5)) {}
};

struct CaseValue {
  std::string name;
  double value;
  bool ok;
};

struct Alg1Report {
  Alg1Constants constants{3.841};
  std::vector<CaseValue> cases;
  bool case3_tail_decreasing = false;
  bool case4_tail_decreasing = false;
  bool passed = false;
};

inline double alg1_case3(const Alg1Constants &c, int d) {
  const double a = c.alpha, b = c.beta;
  return 1 / a + std::pow(a, -0.5) * std::pow(b, d - 1) +
         (d - 1) / a * std::pow(b, d - 2);
}

inline double alg1_case4(const Alg1Constants &c, int d) {
  const double a = c.alpha;
  return 1 / a + std::pow(a, -d) + 2.0 * d / a * std::pow(c.beta, d);
}

inline Alg1Report verify_alg1(double alpha, int dmax = 10) {
  if (!(alpha > 1))
    throw std::invalid_argument("alpha must exceed 1");
  Alg1Report r;
  r.constants = Alg1Constants(alpha);
  const double a = alpha, b = r.constants.beta;
  auto p = [a](double e) { return std::pow(a, e); };
  auto add = [&r](std::string name, double v) {
    r.cases.push_back({std::move(name), v, v <= 1 + kSlack});
  };
  add("case1 beta", p(-0.5) + p(-1));
  add("deg1 unlabeled z", 2 * p(-1) + 2 * p(-1) * b);
  add("deg1 Not z", 3 * p(-1) + p(-1.5));
  add("deg1 king z", 3 * p(-1));
  add("vKvG both two", p(-1) + 2 * p(-1));
  add("vKvG one two", 2 * p(-1.5) + p(-2) + 2 * p(-1));
  add("vKvG none two", p(-1) + 2 * p(-1.5) + 4 * p(-2) + 2 * p(-2.5));
  std::vector<double> f3, f4;
  for (int d = 2; d <= dmax; ++d) {
    f3.push_back(alg1_case3(r.constants, d));
    f4.push_back(alg1_case4(r.constants, d));
    add("case3 d=" + std::to_string(d), f3.back());
    add("case4 d=" + std::to_string(d), f4.back());
  }
  r.case3_tail_decreasing = r.case4_tail_decreasing = true;
  for (int d = 5; d <= dmax; ++d) {
    r.case3_tail_decreasing &= f3[d - 2] < f3[d - 3];
    r.case4_tail_decreasing &= f4[d - 2] < f4[d - 3];
  }
  r.passed = r.case3_tail_decreasing && r.case4_tail_decreasing &&
             std::all_of(r.cases.begin(), r.cases.end(),
                         [](const CaseValue &c) { return c.ok; });
  return r;
}

// ---------------------------------------------------------------------------
// Measure & Conquer algorithm

/// a + ai*i + b*wl + (c + ci*i)*wn, repeated m + mi*i times.
struct Decrease {
  double a, ai, b, c, ci;
  int m = 1, mi = 0;
  double value(double wl, double wn, int i) const {
    return a + ai * i + b * wl + (c + ci * i) * wn;
  }
  int count(int i) const { return m + mi * i; }
};

struct BranchCase {
  std::string name;
  std::vector<Decrease> decreases;
  int i_min = 0, i_max = 0; // family range; both 0 for a single vector
  bool objective = true;    // false for rows kept only for comparison
  std::string note;

  bool family() const { return i_max > 0; }

  std::vector<double> vector_at(double wl, double wn, int i) const {
    std::vector<double> out;
    for (const auto &d : decreases)
      out.insert(out.end(), d.count(i), d.value(wl, wn, i));
    return out;
  }
};

inline constexpr int kFamilyCap = 12;

/// The branching rows of the M&C analysis. The symmetric king/garden rows
/// have identical vectors and are generated from these by mirror_cases().
inline std::vector<BranchCase> branch_cases() {
  return {
      {"(1a)", {{1, 0, 0, -1, 0}, {0, 0, 1, -1, 0}}, 0, 0, true, ""},
      {"(1b)", {{2, 0, -1, -1, 0}, {1, 0, -1, 1, 0}}, 0, 0, true,
       "recurrence as derived"},
      {"(1b) alt", {{2, 0, -1, -2, 0}, {1, 0, -1, 1, 0}}, 0, 0, false,
       "alternate vector, kept for comparison"},
      {"(1c)", {{1, 0, 0, -1, 0}, {1, 0, -1, 2, 0}}, 0, 0, true, ""},
      {"(2a)", {{1, 0, -1, 2, 0, 2}}, 0, 0, true, ""},
      {"(2b)", {{2, 0, -2, 1, 0, 2}}, 0, 0, true, ""},
      {"(2c)", {{2, 0, -2, 1, 0}, {1, 0, -1, 1, 0}}, 0, 0, true, ""},
      {"(3)#j", {{1, 0, -1, 0, 1, 0, 1}}, 2, kFamilyCap, true,
       "i = deg(v), i branches"},
      {"(4a)#j",
       {{0, 1, 0, 0, 0}, {2, 0, 0, 0, 0}, {1, 0, 0, 0, 1, 0, 2}},
       3,
       kFamilyCap,
       true,
       "tail recurrence"},
      {"(4a)#j alt",
       {{0, 1, 0, 0, 0}, {2, 0, 0, 0, 0}, {1, 0, -1, 0, 1, 0, 2}},
       3,
       kFamilyCap,
       false,
       "alternate vector, kept for comparison"},
      {"(4b)#j",
       {{0, 1, 0, 0, 0}, {1, 0, 0, 0, 0}, {1, 0, 0, 1, 1, 0, 2}},
       4,
       kFamilyCap,
       true,
       "tail recurrence"},
      {"(4b)#j alt",
       {{0, 1, 0, 0, 0}, {1, 0, 0, 0, 0}, {1, 0, -1, 1, 1, 0, 2}},
       4,
       kFamilyCap,
       false,
       "alternate vector, kept for comparison"},
  };
}

inline std::vector<BranchCase> mirror_cases(const std::vector<BranchCase> &in) {
  std::vector<BranchCase> out;
  for (const auto &c : in) {
    out.push_back(c);
    BranchCase m = c;
    m.name += " sym";
    out.push_back(m);
  }
  return out;
}

struct RowResult {
  std::string name;
  int i = 0;
  std::vector<double> vector;
  double number = 0;
  bool objective = true;
};

struct TailResult {
  std::string name;
  std::vector<std::pair<int, double>> f; // tail f(i) at the target base
  bool decreasing_from_4 = false;
  bool all_below_one = false;
};

struct Alg2Report {
  double wl = 0, wn = 0, target = 0;
  std::vector<RowResult> rows;
  std::vector<TailResult> tails;
  double max_number = 0;
  std::string argmax;
  double saddle3 = 0; // zero of the derivative of the case (3) function
  bool passed = false;
};

// Family tail f(i) functions, each evaluated at base x.
inline double tail_f3(double x, double wl, double wn, int i) {
  return i * std::pow(x, -((1 - wl) + (i + 1) * wn));
}
inline double tail_f4a(double x, double wn, int i) {
  return std::pow(x, -i) + 2.0 * i * std::pow(x, -(1 + i * wn)) +
         std::pow(x, -2.0);
}
inline double tail_f4b(double x, double wn, int i) {
  return std::pow(x, -i) + 2.0 * i * std::pow(x, -(1 + (i + 1) * wn)) +
         std::pow(x, -1.0);
}

inline Alg2Report verify_alg2(double wl, double wn, double target,
                              double tolerance = 1e-3) {
  Alg2Report r;
  r.wl = wl;
  r.wn = wn;
  r.target = target;
  for (const auto &c : mirror_cases(branch_cases())) {
    const int lo = c.family() ? c.i_min : 0, hi = c.family() ? c.i_max : 0;
    for (int i = lo; i <= hi; ++i) {
      RowResult row{c.name, i, c.vector_at(wl, wn, i), 0, c.objective};
      row.number = branching_number(row.vector);
      if (c.objective && row.number > r.max_number) {
        r.max_number = row.number;
        r.argmax = c.family() ? c.name + " i=" + std::to_string(i) : c.name;
      }
      r.rows.push_back(std::move(row));
    }
  }
  auto tail = [&](std::string name, int lo, auto f) {
    TailResult t{std::move(name), {}, true, true};
    for (int i = lo; i <= kFamilyCap; ++i) {
      t.f.emplace_back(i, f(i));
      t.all_below_one &= t.f.back().second < 1;
      if (i > 4)
        t.decreasing_from_4 &= t.f.back().second < t.f[t.f.size() - 2].second;
    }
    r.tails.push_back(std::move(t));
  };
  tail("(3)#j", 2, [&](int i) { return tail_f3(target, wl, wn, i); });
  tail("(4a)#j", 3, [&](int i) { return tail_f4a(target, wn, i); });
  tail("(4b)#j", 4, [&](int i) { return tail_f4b(target, wn, i); });
  r.saddle3 = wn > 0 ? 1 / (wn * std::log(target))
                     : std::numeric_limits<double>::infinity();
  bool tails_ok = true;
  for (const auto &t : r.tails)
    tails_ok &= t.decreasing_from_4 && t.all_below_one;
  // branching numbers of the families must also fall past i = 4
  for (const auto &c : branch_cases()) {
    if (!c.family() || !c.objective)
      continue;
    double prev = std::numeric_limits<double>::infinity();
    for (int i = 4; i <= c.i_max; ++i) {
      const double b = branching_number(c.vector_at(wl, wn, i));
      tails_ok &= b <= prev + kSlack;
      prev = b;
    }
  }
  r.passed = tails_ok && r.max_number <= target + tolerance;
  return r;
}

/// Maximum branching number over the objective rows, or infinity when a
/// decrease is not positive.
inline double alg2_objective(double wl, double wn) {
  double best = 0;
  for (const auto &c : branch_cases()) {
    if (!c.objective)
      continue;
    const int lo = c.family() ? c.i_min : 0, hi = c.family() ? c.i_max : 0;
    for (int i = lo; i <= hi; ++i) {
      const auto v = c.vector_at(wl, wn, i);
      if (*std::min_element(v.begin(), v.end()) <= 0)
        return std::numeric_limits<double>::infinity();
      best = std::max(best, branching_number(v));
    }
  }
  return best;
}

struct WeightOptimum {
  double wl = 0, wn = 0, objective = 0;
  long evaluated = 0;
};

inline bool weights_feasible(double wl, double wn) {
  const double e = 1e-12;
  return wn >= -e && wn <= 0.5 + e && wl >= 0.5 - e && wl <= 1 + e &&
         wl + wn <= 1 + e;
}

/// Grid search over the feasible weight region. A point is only solved
/// exactly when every row already fits under the incumbent.
inline WeightOptimum optimize_weights(double step) {
  if (!(step > 0))
    throw std::invalid_argument("step must be positive");
  const auto cases = branch_cases();
  WeightOptimum best{0, 0, std::numeric_limits<double>::infinity(), 0};
  const long steps = std::lround(1.0 / step);
  for (long a = 0; a <= steps; ++a) {
    const double wn = a * step;
    for (long b = 0; b <= steps; ++b) {
      const double wl = b * step;
      if (!weights_feasible(wl, wn))
        continue;
      ++best.evaluated;
      bool beats = true;
      if (std::isfinite(best.objective))
        for (const auto &c : cases) {
          if (!c.objective)
            continue;
          const int lo = c.family() ? c.i_min : 0,
                    hi = c.family() ? c.i_max : 0;
          for (int i = lo; i <= hi && beats; ++i) {
            const auto v = c.vector_at(wl, wn, i);
            beats = *std::min_element(v.begin(), v.end()) > 0 &&
                    within(v, best.objective);
          }
          if (!beats)
            break;
        }
      if (!beats)
        continue;
      const double obj = alg2_objective(wl, wn);
      if (obj < best.objective) {
        best.objective = obj;
        best.wl = wl;
        best.wn = wn;
      }
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Win-win bases

struct WinWin {
  double threshold = 0; // enumeration covers sets up to threshold * n
  double base = 0;
  bool passed = false;
};

/// Balances the subset-enumeration base p^-p (1-p)^-(1-p) against the
/// parameterized base alpha^(1-p).
inline WinWin verify_winwin(double alpha, double claimed, double tol) {
  if (!(alpha > 1))
    throw std::invalid_argument("alpha must exceed 1");
  auto entropy = [](double p) {
    return -p * std::log(p) - (1 - p) * std::log(1 - p);
  };
  auto g = [&](double p) { return entropy(p) - (1 - p) * std::log(alpha); };
  WinWin w;
  if (g(0.5) <= 0) {
    w.threshold = 0.5;
  } else {
    double lo = 1e-15, hi = 0.5;
    while (hi - lo > 1e-14) {
      const double mid = 0.5 * (lo + hi);
      (g(mid) < 0 ? lo : hi) = mid;
    }
    w.threshold = 0.5 * (lo + hi);
  }
  w.base = std::exp(entropy(w.threshold));
  w.passed = std::abs(w.base - claimed) <= tol;
  return w;
}

// ---------------------------------------------------------------------------
// Vertex-count measure from the conclusion: Ke_i counts 1, weights wl, wn.

struct ConclusionReport {
  double wl = 0, wn = 0;
  double case_1a = 0, case_1c = 0, base = 0;
  double case_1c_alt = 0; // with the opposite sign on 2wn
};

inline std::vector<double> conclusion_1a(double wl, double wn) {
  return {1 - wn, wl - wn};
}
// NotG -> Ke_i gives 1-wn, Ge_a -> Ge_i gives 1-wl, three U -> NotK give 3wn.
inline std::vector<double> conclusion_1c(double wl, double wn) {
  return {1 - wn, 2 - wl + 2 * wn};
}
inline std::vector<double> conclusion_1c_alt(double wl, double wn) {
  return {1 - wn, 2 - wl - 2 * wn};
}

inline double safe_number(const std::vector<double> &v) {
  for (double x : v)
    if (!(x > 0))
      return std::numeric_limits<double>::infinity();
  return branching_number(v);
}

inline ConclusionReport conclusion_measure(double wl, double wn) {
  ConclusionReport r;
  r.wl = wl;
  r.wn = wn;
  r.case_1a = safe_number(conclusion_1a(wl, wn));
  r.case_1c = safe_number(conclusion_1c(wl, wn));
  r.case_1c_alt =
      std::max(r.case_1a, safe_number(conclusion_1c_alt(wl, wn)));
  r.base = std::max(r.case_1a, r.case_1c);
  return r;
}

/// Free grid minimization over wl in [0,2], wn in [0,1].
inline ConclusionReport optimize_conclusion(double step, bool alt = false) {
  ConclusionReport best;
  best.base = best.case_1c_alt = std::numeric_limits<double>::infinity();
  const long sl = std::lround(2.0 / step), sn = std::lround(1.0 / step);
  for (long a = 0; a <= sl; ++a)
    for (long b = 0; b <= sn; ++b) {
      const double wl = a * step, wn = b * step;
      ConclusionReport r = conclusion_measure(wl, wn);
      const double v = alt ? r.case_1c_alt : r.base;
      if (v < (alt ? best.case_1c_alt : best.base))
        best = r;
    }
  return best;
}

} // namespace irred::analysis

#endif

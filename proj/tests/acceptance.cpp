// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line; the exit status is the number of failed criteria. The full sweep is
// run once up front and shared by the criteria that consume it.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "gammagen/baselines.hpp"
#include "gammagen/gamma_core.hpp"
#include "gammagen/rng.hpp"
#include "gammagen/special_functions.hpp"
#include "gammagen/stats.hpp"
#include "gammagen/sweep.hpp"

using namespace gammagen;

namespace {

int failures = 0;

void report(int id, const std::string& what, bool ok,
            const std::string& detail = "") {
  std::printf("criterion %2d [%s] %s%s%s\n", id, ok ? "PASS" : "FAIL",
              what.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

bool near(double a, double b, double tol) { return std::fabs(a - b) < tol; }

// ---- criterion 1: location and depth of the M1 acceptance-rate minimum ----

void criterion_minimum_ar(const std::vector<ARSweepRecord>& rows) {
  bool ok = theoretical_ar_m1(1.99) >= 0.675 && theoretical_ar_m1(1.99) <= 0.685;

  double global_min = 2.0, window_min = 2.0;
  double theo_min = 2.0, theo_argmin = 0.0;
  for (const auto& r : rows) {
    if (r.method != MethodId::M1) continue;
    global_min = std::min(global_min, r.empirical_ar);
    if (r.alpha >= 1.9 - 1e-9 && r.alpha < 2.0 - 1e-9) {
      window_min = std::min(window_min, r.empirical_ar);
    }
    // Ties in the closed form (the hat construction repeats its worst gap
    // one unit up in alpha) resolve to the lowest alpha.
    if (r.theoretical_ar < theo_min - 1e-12) {
      theo_min = r.theoretical_ar;
      theo_argmin = r.alpha;
    }
  }
  ok = ok && theo_argmin >= 1.9 - 1e-9 && theo_argmin < 2.0 - 1e-9;
  ok = ok && near(window_min, 0.68, 0.01);
  // The empirical argmin can land on an exactly tied grid point elsewhere;
  // the window must hold the minimum up to Monte Carlo noise.
  ok = ok && window_min - global_min < 0.005;

  report(1, "M1 minimum acceptance rate near alpha = 1.99", ok,
         "ar(1.99)=" + num(theoretical_ar_m1(1.99)) +
             " argmin=" + num(theo_argmin) + " min=" + num(window_min));
}

// ---- criterion 2: every sweep cell matches its reference rate ----

void criterion_sweep_accuracy(const std::vector<ARSweepRecord>& rows) {
  std::size_t cells = 0;
  double worst = 0.0;
  double worst_alpha = 0.0;
  std::string worst_method;
  for (const auto& r : rows) {
    ++cells;
    const double dev = std::fabs(r.empirical_ar - r.theoretical_ar);
    if (dev > worst) {
      worst = dev;
      worst_alpha = r.alpha;
      worst_method = method_name(r.method);
    }
  }
  const bool ok = cells >= 5 * 500 && worst < 0.005;
  report(2, "full sweep within 0.005 of reference rates", ok,
         "cells=" + std::to_string(cells) + " worst=" + num(worst) + " (" +
             worst_method + ", alpha=" + num(worst_alpha) + ")");
}

// ---- criterion 3: which method wins where ----

void criterion_ranking(const std::vector<ARSweepRecord>& rows) {
  // theoretical AR per (alpha, method), keyed by alpha rounded to the grid
  std::map<long, std::map<MethodId, double>> grid;
  for (const auto& r : rows) {
    grid[std::lround(r.alpha * 100.0)][r.method] = r.theoretical_ar;
  }
  const double noise = 0.005;  // tie-resolution floor
  bool ok = true;
  std::string first_bad;
  auto check = [&](long key, MethodId leader, bool strict) {
    const auto& cell = grid.at(key);
    if (cell.size() < 5) return;  // baselines absent (alpha <= 1)
    const double lead = cell.at(leader);
    for (const auto& [m, ar] : cell) {
      if (m == leader) continue;
      const bool fine = strict ? lead > ar : lead >= ar - noise;
      if (!fine && ok) {
        ok = false;
        first_bad = method_name(leader) + " vs " + method_name(m) +
                    " at alpha=" + num(key / 100.0);
      }
      ok = ok && fine;
    }
  };

  for (const auto& [key, cell] : grid) {
    const double a = key / 100.0;
    if (a >= 4.0 - 1e-9) check(key, MethodId::M1, true);
    if (a <= 1.35 + 1e-9 || (a >= 2.0 - 1e-9 && a <= 2.37 + 1e-9)) {
      check(key, MethodId::M1, false);
    }
    if (a > 1.35 + 1e-9 && a < 2.0 - 1e-9) check(key, MethodId::M4TStudent, false);
    if (a >= 3.87 - 1e-9 && a < 4.0 - 1e-9) {
      ok = ok && cell.at(MethodId::M2LogLogistic) >= cell.at(MethodId::M1);
    }
  }
  report(3, "crossover ranking across the alpha grid", ok, first_bad);
}

// ---- criterion 4: large-shape limits ----

void criterion_asymptotes() {
  const double alpha = 1000.0;
  const std::size_t n = 1000000;
  bool ok = true;
  std::string detail;
  UniformSource base(4000);
  for (MethodId m : {MethodId::M1, MethodId::M2LogLogistic, MethodId::M3Cauchy,
                     MethodId::M4TStudent, MethodId::M5Rou}) {
    UniformSource src = base.substream(static_cast<std::uint64_t>(m));
    const SampleBatch batch =
        m == MethodId::M1 ? sample_m1(GammaParams(alpha, 1.0), src, n)
                          : sample_method(m, alpha, src, n);
    const double ar = batch.empirical_ar();
    const double limit = asymptotic_ar(m);
    const bool fine =
        m == MethodId::M1 ? ar >= 0.98 : std::fabs(ar - limit) < 0.01;
    detail += method_name(m) + "=" + num(ar) + " ";
    ok = ok && fine;
  }
  report(4, "alpha = 1000 acceptance rates reach their limits", ok, detail);
}

// ---- criterion 5: integer shapes never reject ----

void criterion_integer_exactness() {
  bool ok = true;
  UniformSource base(5000);
  for (int k = 1; k <= 30; ++k) {
    UniformSource src = base.substream(k);
    const SampleBatch batch = sample_m1(GammaParams(k, 1.0), src, 10000);
    ok = ok && batch.proposed == batch.accepted && batch.proposed == 10000;
    ok = ok && theoretical_ar_m1(k) == 1.0;
  }
  report(5, "integer shapes: proposals = accepts and AR = 1 exactly", ok);
}

// ---- criterion 6: hat domination and tangency location ----

void criterion_envelope_suite() {
  const std::vector<double> alphas{1.0, 1.01, 1.3,  1.5,  1.99, 2.0,
                                   2.5, 3.7,  4.5,  10.2, 29.5};
  const std::vector<double> betas{0.1, 1.0, 10.0};
  bool ok = true;
  std::string first_bad;
  for (double a : alphas) {
    for (double b : betas) {
      const GammaParams p(a, b);
      const ProposalParams prop = build_proposal(p);
      const EnvelopeReport r = envelope_check(
          [p](double x) { return log_target_unnorm(p, x); },
          [prop](double x) { return log_proposal_unnorm(prop, x); }, 0.0,
          gamma_quantile(p, 0.999999), 10000);
      bool fine = r.passed;
      if (!is_integer_shape(a)) {
        // Hat and target touch exactly once: at the mode for alpha >= 2,
        // at x = alpha/beta below it.
        const double expect = a >= 2.0 ? p.mode() : p.tangent_point();
        bool touched = false;
        for (double t : r.tangency_points) {
          touched = touched || std::fabs(t - expect) < 1e-3 * (1.0 + expect);
        }
        fine = fine && touched && r.tangency_points.size() == 1;
      }
      if (!fine && ok) {
        first_bad = "alpha=" + num(a) + " beta=" + num(b);
      }
      ok = ok && fine;
    }
  }
  report(6, "M1 envelope suite with tangency at the predicted point", ok,
         first_bad);
}

// ---- criterion 7: the tangent point alpha/beta minimizes the hat area ----

void criterion_tangent_optimality() {
  bool ok = true;
  for (double a : {1.1, 1.5, 1.9}) {
    for (double b : {1.0, 2.0}) {
      const GammaParams p(a, b);
      const double star = optimal_tangent(p);
      const double area_star = tangent_area(star, p);
      ok = ok && near(star, a / b, 1e-12);

      const double lo = p.mode() * 1.02 + 1e-3 / b;
      const double hi = 5.0 * star;
      for (int j = 0; j < 200; ++j) {
        const double theta = lo + (hi - lo) * j / 199.0;
        ok = ok && tangent_area(theta, p) >= area_star - 1e-12;
      }
      const double h = 1e-5 * star;
      const double slope =
          (tangent_area(star + h, p) - tangent_area(star - h, p)) / (2.0 * h);
      ok = ok && std::fabs(slope) * star / area_star < 1e-6;
    }
  }
  report(7, "tangent hat area is minimized at theta = alpha/beta", ok);
}

// ---- criterion 8: the acceptance rate does not depend on the rate beta ----

void criterion_beta_invariance() {
  bool ok = true;
  std::string detail;
  UniformSource base(8000);
  std::uint64_t stream = 0;
  for (double a : {1.5, 4.5}) {
    std::vector<double> ars;
    for (double b : {0.1, 1.0, 10.0}) {
      UniformSource src = base.substream(stream++);
      ars.push_back(
          sample_m1(GammaParams(a, b), src, 600000).empirical_ar());
    }
    const auto [lo, hi] = std::minmax_element(ars.begin(), ars.end());
    ok = ok && *hi - *lo < 0.005;
    detail += "alpha=" + num(a) + " spread=" + num(*hi - *lo) + " ";
  }
  report(8, "empirical AR is invariant in beta (closed form takes none)", ok,
         detail);
}

// ---- criterion 9: distributional correctness for every method ----

void criterion_distributional() {
  struct Case {
    MethodId method;
    double alpha;
    double beta;
  };
  std::vector<Case> cases;
  for (MethodId m : {MethodId::M1, MethodId::M2LogLogistic, MethodId::M3Cauchy,
                     MethodId::M4TStudent, MethodId::M5Rou}) {
    for (double a : {2.5, 4.0, 10.0}) cases.push_back({m, a, 1.0});
  }
  cases.push_back({MethodId::M1, 1.5, 1.0});
  cases.push_back({MethodId::M4TStudent, 1.5, 1.0});
  for (double a : {1.5, 2.5, 4.0, 10.0}) cases.push_back({MethodId::M1, a, 3.0});

  bool ok = true;
  std::string first_bad;
  UniformSource base(9000);
  std::uint64_t stream = 0;
  for (const auto& c : cases) {
    UniformSource src = base.substream(stream++);
    SampleBatch batch =
        c.method == MethodId::M1
            ? sample_m1(GammaParams(c.alpha, c.beta), src, 100000)
            : sample_method(c.method, c.alpha, src, 100000);
    if (c.method != MethodId::M1 && c.beta != 1.0) {
      for (double& v : batch.values) v /= c.beta;
    }
    const GofReport r = gof_report(batch.values, GammaParams(c.alpha, c.beta));
    const bool fine = r.ks_stat < r.ks_critical && r.passed;
    if (!fine && ok) {
      first_bad = method_name(c.method) + " alpha=" + num(c.alpha) +
                  " beta=" + num(c.beta) + " ks=" + num(r.ks_stat);
    }
    ok = ok && fine;
  }
  report(9, "KS at 1% and 4-sigma moments for every method", ok, first_bad);
}

// ---- criterion 10: the printed closed form vs the corrected one ----

void criterion_formula_discrepancy() {
  // As printed, the alpha >= 2 rate reads
  // exp((alpha - alpha_p)(1 - ln(alpha - 1))) * Gamma(alpha) / Gamma(alpha_p),
  // which is not a probability: at alpha = 2.5 it exceeds 1.
  auto printed = [](double alpha) {
    const double ap = std::floor(alpha);
    return std::exp((alpha - ap) * (1.0 - std::log(alpha - 1.0)) +
                    ln_gamma(alpha) - ln_gamma(ap));
  };
  bool ok = near(printed(2.5), 1.789525, 1e-4);

  const GammaParams p(2.5, 1.0);
  const ProposalParams prop = build_proposal(p);
  const double upper = p.mode() + 60.0 * (std::sqrt(p.alpha) + 1.0);
  const double quad = quadrature_ar(
      [p](double x) { return target_unnorm(p, x); },
      [prop](double x) { return proposal_unnorm(prop, x); }, upper);
  UniformSource src(10000);
  const double mc =
      sample_m1(p, src, 600000).empirical_ar();
  ok = ok && near(quad, 0.795, 0.005) && near(mc, 0.795, 0.005);

  double worst = 0.0;
  UniformSource pick(10001);
  for (int i = 0; i < 50; ++i) {
    const double a = 2.0 + 28.0 * pick.next();
    const GammaParams pa(a, 1.0);
    const ProposalParams pr = build_proposal(pa);
    const double up = pa.mode() + 60.0 * (std::sqrt(a) + 1.0);
    const double q = quadrature_ar(
        [pa](double x) { return target_unnorm(pa, x); },
        [pr](double x) { return proposal_unnorm(pr, x); }, up);
    worst = std::max(worst, std::fabs(theoretical_ar_m1(a) - q));
  }
  ok = ok && worst < 1e-6;

  report(10, "printed rate formula is off; corrected form matches quadrature",
         ok,
         "printed(2.5)=" + num(printed(2.5)) + " quad=" + num(quad) +
             " mc=" + num(mc) + " worst_gap=" + num(worst));
}

}  // namespace

int main() {
  SweepConfig config;  // defaults: 5 methods, alpha 1..30 step 0.05, N = 6e5
  std::printf("running full sweep (%zu samples per cell)...\n", config.n);
  std::fflush(stdout);
  const std::vector<ARSweepRecord> rows = run_sweep(config);

  criterion_minimum_ar(rows);
  criterion_sweep_accuracy(rows);
  criterion_ranking(rows);
  criterion_asymptotes();
  criterion_integer_exactness();
  criterion_envelope_suite();
  criterion_tangent_optimality();
  criterion_beta_invariance();
  criterion_distributional();
  criterion_formula_discrepancy();

  std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}

#include "gammagen/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gammagen {

double gamma_cdf(const GammaParams& params, double x) {
  if (x < 0.0) throw std::domain_error("gamma_cdf: x >= 0 required");
  return reg_lower_incomplete_gamma(params.alpha, params.beta * x);
}

double gamma_quantile(const GammaParams& params, double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw std::domain_error("gamma_quantile: p in (0,1) required");
  }
  double lo = 0.0;
  double hi = (params.alpha + 10.0 * std::sqrt(params.alpha) + 10.0) / params.beta;
  while (gamma_cdf(params, hi) < p) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (gamma_cdf(params, mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double ks_statistic(std::span<const double> sorted,
                    const std::function<double(double)>& cdf) {
  const std::size_t n = sorted.size();
  if (n == 0) throw std::domain_error("ks_statistic: empty sample");
  const double dn = static_cast<double>(n);
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = cdf(sorted[i]);
    d = std::max(d, (i + 1) / dn - f);
    d = std::max(d, f - i / dn);
  }
  return d;
}

GofReport moment_report(std::span<const double> samples,
                        const GammaParams& params) {
  const std::size_t n = samples.size();
  if (n < 1000) throw std::domain_error("moment_report: n >= 1000 required");
  const double dn = static_cast<double>(n);

  double mean = 0.0;
  for (double v : samples) mean += v;
  mean /= dn;
  double m2 = 0.0, m3 = 0.0;
  for (double v : samples) {
    const double d = v - mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  const double var = m2 / (dn - 1.0);
  const double skew = (m3 / dn) / std::pow(m2 / dn, 1.5);

  const double alpha = params.alpha;
  const double beta = params.beta;
  const double true_mean = alpha / beta;
  const double true_var = alpha / (beta * beta);
  const double true_skew = 2.0 / std::sqrt(alpha);

  GofReport r;
  r.n = n;
  r.mean_err = (mean - true_mean) / std::sqrt(true_var / dn);
  // Var(s^2) = (mu4 - sigma^4)/n with mu4 = sigma^4 * (3 + 6/alpha).
  const double se_var = true_var * std::sqrt((2.0 + 6.0 / alpha) / dn);
  r.var_err = (var - true_var) / se_var;
  // Asymptotic variance of sample skewness by the delta method, using the
  // population central moments (scale-free, so beta = 1 suffices):
  // mu2 = a, mu3 = 2a, mu4 = 3a(a+2), mu5 = 4a(5a+6), mu6 = 5a(3a^2+26a+24).
  // The normal-theory 6/n is far too small for a skewed population.
  {
    const double a = alpha;
    const double mu2 = a;
    const double mu3 = 2.0 * a;
    const double mu4 = 3.0 * a * (a + 2.0);
    const double mu5 = 4.0 * a * (5.0 * a + 6.0);
    const double mu6 = 5.0 * a * (3.0 * a * a + 26.0 * a + 24.0);
    const double n_var_skew =
        (mu6 - mu3 * mu3 - 6.0 * mu2 * mu4 + 9.0 * mu2 * mu2 * mu2) /
            (mu2 * mu2 * mu2) -
        3.0 * mu3 * (mu5 - 4.0 * mu2 * mu3) / (mu2 * mu2 * mu2 * mu2) +
        2.25 * mu3 * mu3 * (mu4 - mu2 * mu2) / std::pow(mu2, 5);
    r.skew_err = (skew - true_skew) / std::sqrt(n_var_skew / dn);
  }
  r.passed = std::fabs(r.mean_err) < 4.0 && std::fabs(r.var_err) < 4.0 &&
             std::fabs(r.skew_err) < 4.0;
  return r;
}

GofReport gof_report(std::span<const double> samples,
                     const GammaParams& params) {
  GofReport r = moment_report(samples, params);
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  r.ks_stat = ks_statistic(sorted, [&](double x) { return gamma_cdf(params, x); });
  r.ks_critical = ks_critical_1pct(samples.size());
  r.passed = r.passed && r.ks_stat < r.ks_critical;
  return r;
}

EnvelopeReport envelope_check(const LogDensity& log_target,
                              const LogDensity& log_hat, double x_lo,
                              double x_hi, std::size_t grid_size) {
  if (x_lo < 0.0 || !(x_hi > x_lo)) {
    throw std::domain_error("envelope_check: need 0 <= x_lo < x_hi");
  }
  if (grid_size < 1000) {
    throw std::domain_error("envelope_check: grid_size >= 1000 required");
  }

  // Linear spacing over the bulk, log spacing pushed into both tails.
  std::vector<double> grid;
  grid.reserve(grid_size + 2);
  const std::size_t n_lin = grid_size / 2;
  const std::size_t n_log = grid_size - n_lin;
  for (std::size_t i = 0; i <= n_lin; ++i) {
    grid.push_back(x_lo + (x_hi - x_lo) * i / static_cast<double>(n_lin));
  }
  const double lo = std::max(x_lo, x_hi * 1e-9);
  const double ratio = std::log(x_hi / lo);
  for (std::size_t i = 0; i < n_log; ++i) {
    grid.push_back(lo * std::exp(ratio * i / static_cast<double>(n_log)));
  }
  std::sort(grid.begin(), grid.end());

  EnvelopeReport report;
  report.grid_size = grid.size();
  report.x_lo = x_lo;
  report.x_hi = x_hi;

  const double inf = std::numeric_limits<double>::infinity();
  auto gap_at = [&](double x) {
    const double lt = log_target(x);
    const double lh = log_hat(x);
    if (lt == -inf && lh == -inf) return inf;  // both vanish, no constraint
    return lh - lt;  // >= 0 when the hat dominates
  };

  std::vector<double> gaps(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    gaps[i] = gap_at(grid[i]);
    if (gaps[i] < 0.0) {
      report.max_relative_violation =
          std::max(report.max_relative_violation, std::expm1(-gaps[i]));
    }
  }

  // Tangency candidates: grid points already within tolerance, plus local
  // minima of the gap refined by golden section (a quadratic touch can slip
  // between grid points).
  constexpr double kTangencyTol = 1e-8;
  bool in_cluster = false;
  double best_gap = inf;
  double best_x = 0.0;
  auto flush_cluster = [&]() {
    if (in_cluster) report.tangency_points.push_back(best_x);
    in_cluster = false;
    best_gap = inf;
  };
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double g = std::fabs(gaps[i]);
    if (g < kTangencyTol) {
      in_cluster = true;
      if (g < best_gap) {
        best_gap = g;
        best_x = grid[i];
      }
      continue;
    }
    flush_cluster();
    if (i > 0 && i + 1 < grid.size() && gaps[i] < 1e-3 &&
        gaps[i] < gaps[i - 1] && gaps[i] <= gaps[i + 1]) {
      const double x = golden_section_min(gap_at, grid[i - 1], grid[i + 1],
                                          1e-12 * std::max(1.0, grid[i + 1]));
      if (std::fabs(gap_at(x)) < kTangencyTol) {
        report.tangency_points.push_back(x);
      }
    }
  }
  flush_cluster();
  std::sort(report.tangency_points.begin(), report.tangency_points.end());

  report.passed = report.max_relative_violation <= 1e-12;
  return report;
}

double golden_section_min(const std::function<double(double)>& f, double a,
                          double b, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double fa, double b, double fb, double fm,
                        double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0) {
    throw std::runtime_error("quadrature: recursion limit reached");
  }
  if (std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, fa, m, fm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, fm, b, fb, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b) {
  // Coarse pass over panels to set an absolute tolerance matching a
  // ~1e-9 relative target, then adaptive refinement per panel.
  constexpr int kPanels = 64;
  const double h = (b - a) / kPanels;
  double coarse = 0.0;
  for (int i = 0; i < kPanels; ++i) {
    const double x0 = a + i * h;
    coarse += h / 6.0 * (f(x0) + 4.0 * f(x0 + 0.5 * h) + f(x0 + h));
  }
  const double tol = std::max(std::fabs(coarse), 1e-300) * 1e-9 / kPanels;
  double total = 0.0;
  for (int i = 0; i < kPanels; ++i) {
    const double x0 = a + i * h;
    const double x1 = x0 + h;
    const double fa = f(x0);
    const double fb = f(x1);
    const double fm = f(0.5 * (x0 + x1));
    const double whole = h / 6.0 * (fa + 4.0 * fm + fb);
    total += adaptive_simpson(f, x0, fa, x1, fb, fm, whole, tol, 48);
  }
  return total;
}

double quadrature_ar(const std::function<double(double)>& target,
                     const std::function<double(double)>& hat,
                     double upper_limit, double hat_tail) {
  if (!(upper_limit > 0.0)) {
    throw std::domain_error("quadrature_ar: upper_limit > 0 required");
  }
  // Integrate under x = t^2: densities behaving like x^(alpha-1) near zero
  // become t^(2 alpha - 1), smooth enough for the adaptive rule.
  auto squared = [](const std::function<double(double)>& f) {
    return [&f](double t) { return 2.0 * t * f(t * t); };
  };
  const double t_hi = std::sqrt(upper_limit);
  const double i_target = integrate(squared(target), 0.0, t_hi);
  const double i_hat = integrate(squared(hat), 0.0, t_hi) + hat_tail;
  if (!(i_hat > 0.0) || !(i_target > 0.0)) {
    throw std::runtime_error("quadrature_ar: degenerate integrals");
  }
  if (hat_tail == 0.0) {
    // Crude tail bound for a decaying hat; callers with heavy-tailed hats
    // must supply the analytic tail instead.
    const double tail_est = hat(upper_limit) * upper_limit;
    if (tail_est > 1e-12 * i_hat) {
      throw std::runtime_error("quadrature_ar: hat tail beyond upper_limit "
                               "is not negligible");
    }
  }
  return i_target / i_hat;
}

}  // namespace gammagen

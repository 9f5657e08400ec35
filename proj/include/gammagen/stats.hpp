#ifndef GAMMAGEN_STATS_HPP
#define GAMMAGEN_STATS_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "gammagen/gamma_core.hpp"
#include "gammagen/special_functions.hpp"

namespace gammagen {

using LogDensity = std::function<double(double)>;

/// Gamma CDF, P(alpha, beta * x).
double gamma_cdf(const GammaParams& params, double x);

/// Gamma quantile by bisection on gamma_cdf, p in (0,1).
double gamma_quantile(const GammaParams& params, double p);

/// One-sample Kolmogorov-Smirnov statistic D_n. `sorted` must be ascending.
double ks_statistic(std::span<const double> sorted,
                    const std::function<double(double)>& cdf);

/// Asymptotic 1% critical value for D_n.
inline double ks_critical_1pct(std::size_t n) {
  return 1.628 / std::sqrt(static_cast<double>(n));
}

/// Goodness-of-fit summary: KS against the exact Gamma CDF plus
/// standardized moment errors (each divided by its CLT standard error).
struct GofReport {
  std::size_t n = 0;
  double ks_stat = 0.0;
  double ks_critical = 0.0;
  double mean_err = 0.0;
  double var_err = 0.0;
  double skew_err = 0.0;
  bool passed = false;
};

/// Standardized moment errors only (KS fields left zero, passed reflects
/// the 4-sigma moment bounds). Requires n >= 1000.
GofReport moment_report(std::span<const double> samples,
                        const GammaParams& params);

/// Full report: KS + moments. Sorts a copy of the input.
GofReport gof_report(std::span<const double> samples,
                     const GammaParams& params);

/// Result of scanning a hat against a target on a grid.
struct EnvelopeReport {
  std::size_t grid_size = 0;
  double x_lo = 0.0;
  double x_hi = 0.0;
  double max_relative_violation = 0.0;
  std::vector<double> tangency_points;
  bool passed = false;
};

/// Checks ln hat >= ln target on a grid mixing linear spacing over
/// [x_lo, x_hi] with log spacing toward both tails. Grid points where the
/// two agree within 1e-8 in the log domain are recorded as tangency
/// candidates (consecutive hits collapsed to the closest point). Passes
/// when the worst relative violation is at most 1e-12.
EnvelopeReport envelope_check(const LogDensity& log_target,
                              const LogDensity& log_hat, double x_lo,
                              double x_hi, std::size_t grid_size);

/// Acceptance-rate oracle: adaptive-Simpson integrals of target and hat on
/// [0, upper_limit], relative tolerance 1e-9. `hat_tail` is the analytic
/// integral of the hat beyond upper_limit, needed for heavy-tailed hats;
/// when omitted the truncated tail must be provably negligible
/// (< 1e-12 of the total) or a std::runtime_error is thrown.
double quadrature_ar(const std::function<double(double)>& target,
                     const std::function<double(double)>& hat,
                     double upper_limit, double hat_tail = 0.0);

/// Adaptive Simpson quadrature on [a, b], relative tolerance ~1e-9.
double integrate(const std::function<double(double)>& f, double a, double b);

/// Golden-section minimizer on [a, b]; the function must be unimodal there.
/// Returns the abscissa of the minimum to absolute tolerance `tol`.
double golden_section_min(const std::function<double(double)>& f, double a,
                          double b, double tol);

}  // namespace gammagen

#endif

#ifndef GAMMAGEN_BASELINES_HPP
#define GAMMAGEN_BASELINES_HPP

#include <string>

#include "gammagen/gamma_core.hpp"
#include "gammagen/rng.hpp"

namespace gammagen {

/// The five samplers under comparison. All baselines (M2-M5) work at
/// beta = 1; other rates are obtained by dividing the output by beta.
enum class MethodId { M1, M2LogLogistic, M3Cauchy, M4TStudent, M5Rou };

std::string method_name(MethodId id);          // "m1" .. "m5"
MethodId parse_method(const std::string& s);   // throws std::invalid_argument

/// Log-logistic envelope (Cheng). Proposal by CDF inversion
/// x = alpha * (u/(1-u))^(1/lambda), lambda = sqrt(2*alpha - 1); the hat is
/// K1 * x^(lambda-1) / (mu + x^lambda)^2 with mu = alpha^lambda and
/// K1 = 4 * alpha^(alpha+lambda) * e^-alpha. Requires alpha > 1.
SampleBatch sample_cheng(double alpha, UniformSource& src, std::size_t count);

/// Closed-form acceptance rate of the log-logistic envelope,
/// Gamma(alpha) * mu * lambda / K1.
double theoretical_ar_cheng(double alpha);

/// Truncated-Cauchy envelope (Ahrens), centered at the mode with scale
/// sqrt(2*alpha - 1), peak p(mode) * hat_scale, sampled by inversion on
/// x >= 0. Requires alpha > 1.
SampleBatch sample_ahrens_cauchy(double alpha, UniformSource& src,
                                 std::size_t count);

/// Smallest peak multiplier >= 1 making the Cauchy hat dominate the target,
/// found once per alpha by scanning the density ratio on a grid.
double cauchy_hat_scale(double alpha);

/// t2-shaped envelope (Best): K3 * (1 + 0.5 ((x - alpha + 1)/eta)^2)^(-3/2),
/// eta = sqrt((3*alpha - 0.75)/2), K3 = p(mode). Draws with x < 0 are
/// redrawn without counting, so the acceptance rate matches the hat area
/// restricted to x >= 0. Requires alpha > 1.
SampleBatch sample_best(double alpha, UniformSource& src, std::size_t count);

/// Ratio-of-uniforms acceptance region bounds for the mode-relocated
/// density q(x) = p(x + alpha - 1). The unnormalized u_max and v bounds
/// overflow for alpha beyond a few hundred; the log/scaled fields stay
/// finite and are what the sampler uses.
struct RouBounds {
  double mode;             // alpha - 1
  double u_max;            // sqrt(q(0)) = sqrt(p(mode))
  double v_minus;          // inf_{x<0} x * sqrt(q(x)), <= 0
  double v_plus;           // sup_{x>0} x * sqrt(q(x)), > 0
  double log_u_max;        // ln u_max, always finite
  double v_minus_scaled;   // v_minus / u_max
  double v_plus_scaled;    // v_plus / u_max
};

/// Bounds via golden-section search on ln|x| + 0.5 ln q(x), absolute
/// tolerance 1e-10. Requires alpha > 1.
RouBounds rou_bounds(double alpha);

/// Modified ratio-of-uniforms sampler: accept (u, v) uniform on the
/// bounding rectangle iff 2 ln u <= ln q(v/u); the returned variate is
/// v/u + mode. Requires alpha > 1.
SampleBatch sample_rou(double alpha, UniformSource& src, std::size_t count);

/// Acceptance-rate limits for alpha -> infinity.
double asymptotic_ar(MethodId id);

// Log-domain hat evaluators at beta = 1, for envelope checks and the
// quadrature oracle. x >= 0.
double log_cheng_hat(double alpha, double x);
double log_cauchy_hat(double alpha, double x);   // includes cauchy_hat_scale
double log_best_hat(double alpha, double x);

}  // namespace gammagen

#endif

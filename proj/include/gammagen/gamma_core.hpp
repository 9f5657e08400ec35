#ifndef GAMMAGEN_GAMMA_CORE_HPP
#define GAMMAGEN_GAMMA_CORE_HPP

#include <cstdint>
#include <vector>

#include "gammagen/rng.hpp"

namespace gammagen {

/// Shapes with |alpha - round(alpha)| below this are treated as integers,
/// where the proposal degenerates continuously to the target itself.
constexpr double kIntegerShapeTol = 1e-9;

bool is_integer_shape(double alpha);

/// Target distribution parameters: shape alpha >= 1, rate beta > 0.
struct GammaParams {
  double alpha;
  double beta;

  GammaParams(double alpha_, double beta_);

  double mode() const { return (alpha - 1.0) / beta; }      // x_max
  double tangent_point() const { return alpha / beta; }     // x*
};

/// Envelope parameters: an integer-shape Gamma hat
/// K_p * x^(alpha_p - 1) * exp(-beta_p * x) that dominates the target.
struct ProposalParams {
  int alpha_p;
  double beta_p;
  double k_p;
  double log_k_p;
  // Source parameters, kept for the derived accessors below.
  double alpha;
  double beta;

  double omega() const { return beta - beta_p; }
  double x_max() const { return (alpha - 1.0) / beta; }
  double x_star() const { return alpha / beta; }
};

/// Generated variates plus accept/propose counters. Counters are 64-bit so
/// long sweeps cannot wrap them.
struct SampleBatch {
  std::vector<double> values;
  std::uint64_t proposed = 0;
  std::uint64_t accepted = 0;

  double empirical_ar() const {
    return static_cast<double>(accepted) / static_cast<double>(proposed);
  }
};

/// Unnormalized target x^(alpha-1) * exp(-beta*x), x >= 0.
double target_unnorm(const GammaParams& params, double x);

/// ln of the unnormalized target; -inf at x = 0 when alpha > 1.
double log_target_unnorm(const GammaParams& params, double x);

/// Build the dominating hat: alpha >= 2 matches the target's mode location
/// and height with alpha_p = floor(alpha); 1 <= alpha < 2 uses the
/// exponential tangent to ln p at x* = alpha/beta. Integer alpha gives back
/// the target itself (beta_p = beta, K_p = 1).
ProposalParams build_proposal(const GammaParams& params);

double proposal_unnorm(const ProposalParams& prop, double x);
double log_proposal_unnorm(const ProposalParams& prop, double x);

/// Exact Erlang(n, beta) draw as -(1/beta) * ln(prod of n uniforms).
/// Consumes exactly n uniforms; strictly positive.
double erlang_sample(int n, double beta, UniformSource& src);

/// Rejection sampler with the integer-shape Gamma hat. Integer alpha takes
/// the exact Erlang path and never rejects. The accept test runs entirely
/// in the log domain so it stays valid for large shapes.
SampleBatch sample_m1(const GammaParams& params, UniformSource& src,
                      std::size_t count);

/// Closed-form acceptance rate of the hat built by build_proposal.
/// Independent of beta; exactly 1 at integer alpha.
double theoretical_ar_m1(double alpha);

/// Area under the hat, K_p * (alpha_p - 1)! / beta_p^alpha_p.
double proposal_area(const GammaParams& params);

/// Area under the exponential hat tangent to ln p at a generic point theta,
/// theta^(alpha-1) * e^(1-alpha) / (beta - (alpha-1)/theta).
/// Valid for 1 <= alpha < 2 and theta > (alpha-1)/beta.
double tangent_area(double theta, const GammaParams& params);

/// Argmin of tangent_area: theta* = alpha/beta, for 1 <= alpha < 2.
double optimal_tangent(const GammaParams& params);

}  // namespace gammagen

#endif

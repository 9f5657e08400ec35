#include "gammagen/gamma_core.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gammagen/special_functions.hpp"

namespace gammagen {

bool is_integer_shape(double alpha) {
  return std::fabs(alpha - std::round(alpha)) < kIntegerShapeTol;
}

GammaParams::GammaParams(double alpha_, double beta_)
    : alpha(alpha_), beta(beta_) {
  if (!(alpha >= 1.0)) throw std::domain_error("GammaParams: alpha >= 1 required");
  if (!(beta > 0.0)) throw std::domain_error("GammaParams: beta > 0 required");
}

double log_target_unnorm(const GammaParams& params, double x) {
  if (x < 0.0) throw std::domain_error("target_unnorm: x >= 0 required");
  if (x == 0.0) {
    return params.alpha > 1.0 ? -std::numeric_limits<double>::infinity() : 0.0;
  }
  return (params.alpha - 1.0) * std::log(x) - params.beta * x;
}

double target_unnorm(const GammaParams& params, double x) {
  return std::exp(log_target_unnorm(params, x));
}

ProposalParams build_proposal(const GammaParams& params) {
  const double alpha = params.alpha;
  const double beta = params.beta;
  ProposalParams prop{};
  prop.alpha = alpha;
  prop.beta = beta;
  if (is_integer_shape(alpha)) {
    prop.alpha_p = static_cast<int>(std::llround(alpha));
    prop.beta_p = beta;
    prop.k_p = 1.0;
    prop.log_k_p = 0.0;
  } else if (alpha >= 2.0) {
    // Same mode location and height as the target.
    const int ap = static_cast<int>(std::floor(alpha));
    prop.alpha_p = ap;
    prop.beta_p = beta * (ap - 1.0) / (alpha - 1.0);
    prop.log_k_p = (ap - alpha) + (alpha - ap) * std::log((alpha - 1.0) / beta);
    prop.k_p = std::exp(prop.log_k_p);
  } else {
    // Exponential hat tangent to ln p at x* = alpha/beta.
    prop.alpha_p = 1;
    prop.beta_p = beta / alpha;
    prop.log_k_p = (1.0 - alpha) + (alpha - 1.0) * std::log(alpha / beta);
    prop.k_p = std::exp(prop.log_k_p);
  }
  return prop;
}

double log_proposal_unnorm(const ProposalParams& prop, double x) {
  if (x < 0.0) throw std::domain_error("proposal_unnorm: x >= 0 required");
  if (x == 0.0) {
    return prop.alpha_p > 1 ? -std::numeric_limits<double>::infinity()
                            : prop.log_k_p;
  }
  return prop.log_k_p + (prop.alpha_p - 1.0) * std::log(x) - prop.beta_p * x;
}

double proposal_unnorm(const ProposalParams& prop, double x) {
  return std::exp(log_proposal_unnorm(prop, x));
}

double erlang_sample(int n, double beta, UniformSource& src) {
  if (n < 1) throw std::domain_error("erlang_sample: n >= 1 required");
  // -(1/beta) * ln(prod u_i), with the product flushed to the log
  // accumulator before it can underflow.
  double log_prod = 0.0;
  double prod = 1.0;
  for (int i = 0; i < n; ++i) {
    prod *= src.next();
    if (prod < 1e-280) {
      log_prod += std::log(prod);
      prod = 1.0;
    }
  }
  return -(log_prod + std::log(prod)) / beta;
}

SampleBatch sample_m1(const GammaParams& params, UniformSource& src,
                      std::size_t count) {
  const ProposalParams prop = build_proposal(params);
  SampleBatch batch;
  batch.values.reserve(count);
  if (is_integer_shape(params.alpha)) {
    for (std::size_t i = 0; i < count; ++i) {
      batch.values.push_back(erlang_sample(prop.alpha_p, prop.beta_p, src));
    }
    batch.proposed = batch.accepted = count;
    return batch;
  }
  const double shape_gap = params.alpha - prop.alpha_p;
  const double omega = prop.omega();
  while (batch.values.size() < count) {
    const double x = erlang_sample(prop.alpha_p, prop.beta_p, src);
    ++batch.proposed;
    // ln p(x) - ln pi(x); never positive since the hat dominates.
    const double log_ratio = shape_gap * std::log(x) - omega * x - prop.log_k_p;
    if (std::log(src.next()) <= log_ratio) {
      batch.values.push_back(x);
      ++batch.accepted;
    }
  }
  return batch;
}

double theoretical_ar_m1(double alpha) {
  if (!(alpha >= 1.0)) throw std::domain_error("theoretical_ar_m1: alpha >= 1");
  if (is_integer_shape(alpha)) return 1.0;
  if (alpha < 2.0) {
    return std::exp(ln_gamma(alpha) - alpha * std::log(alpha) - (1.0 - alpha));
  }
  const double ap = std::floor(alpha);
  const double log_k_p = (ap - alpha) + (alpha - ap) * std::log(alpha - 1.0);
  const double log_beta_p = std::log((ap - 1.0) / (alpha - 1.0));
  // Gamma(alpha) / [K_p * (alpha_p - 1)! / beta_p^alpha_p], at beta = 1;
  // the beta powers cancel identically for any rate.
  return std::exp(ln_gamma(alpha) - log_k_p - ln_gamma(ap) + ap * log_beta_p);
}

double proposal_area(const GammaParams& params) {
  const ProposalParams prop = build_proposal(params);
  return std::exp(prop.log_k_p + ln_gamma(static_cast<double>(prop.alpha_p)) -
                  prop.alpha_p * std::log(prop.beta_p));
}

double tangent_area(double theta, const GammaParams& params) {
  if (!(params.alpha < 2.0)) {
    throw std::domain_error("tangent_area: requires 1 <= alpha < 2");
  }
  const double rate = params.beta - (params.alpha - 1.0) / theta;
  if (!(theta > 0.0) || !(rate > 0.0)) {
    throw std::domain_error("tangent_area: theta > (alpha-1)/beta required");
  }
  return std::exp((params.alpha - 1.0) * std::log(theta) +
                  (1.0 - params.alpha)) /
         rate;
}

double optimal_tangent(const GammaParams& params) {
  if (!(params.alpha < 2.0)) {
    throw std::domain_error("optimal_tangent: requires 1 <= alpha < 2");
  }
  return params.alpha / params.beta;
}

}  // namespace gammagen

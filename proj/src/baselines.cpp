#include "gammagen/baselines.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gammagen/special_functions.hpp"
#include "gammagen/stats.hpp"

namespace gammagen {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_alpha_above_one(double alpha, const char* who) {
  if (!(alpha > 1.0)) {
    throw std::domain_error(std::string(who) + ": alpha > 1 required");
  }
}

// ln p(x) at beta = 1.
double log_target(double alpha, double x) {
  if (x <= 0.0) return x == 0.0 && alpha == 1.0 ? 0.0 : -kInf;
  return (alpha - 1.0) * std::log(x) - x;
}

// ln p(mode) = (alpha-1) ln(alpha-1) - (alpha-1).
double log_peak(double alpha) {
  const double am = alpha - 1.0;
  return am > 0.0 ? am * std::log(am) - am : 0.0;
}

double softplus(double d) {
  return d > 0.0 ? d + std::log1p(std::exp(-d)) : std::log1p(std::exp(d));
}

}  // namespace

std::string method_name(MethodId id) {
  switch (id) {
    case MethodId::M1: return "m1";
    case MethodId::M2LogLogistic: return "m2";
    case MethodId::M3Cauchy: return "m3";
    case MethodId::M4TStudent: return "m4";
    case MethodId::M5Rou: return "m5";
  }
  throw std::invalid_argument("method_name: bad id");
}

MethodId parse_method(const std::string& s) {
  if (s == "m1") return MethodId::M1;
  if (s == "m2") return MethodId::M2LogLogistic;
  if (s == "m3") return MethodId::M3Cauchy;
  if (s == "m4") return MethodId::M4TStudent;
  if (s == "m5") return MethodId::M5Rou;
  throw std::invalid_argument("unknown method '" + s + "'");
}

double log_cheng_hat(double alpha, double x) {
  if (x < 0.0) throw std::domain_error("log_cheng_hat: x >= 0 required");
  const double lambda = std::sqrt(2.0 * alpha - 1.0);
  if (x == 0.0) return lambda > 1.0 ? -kInf : 0.0;
  const double log_k1 = std::log(4.0) + (alpha + lambda) * std::log(alpha) - alpha;
  // ln(mu + x^lambda) computed around the larger term.
  const double log_mu = lambda * std::log(alpha);
  const double l = log_mu + softplus(lambda * std::log(x / alpha));
  return log_k1 + (lambda - 1.0) * std::log(x) - 2.0 * l;
}

double cauchy_hat_scale(double alpha) {
  require_alpha_above_one(alpha, "cauchy_hat_scale");
  static thread_local double cached_alpha = -1.0;
  static thread_local double cached_scale = 1.0;
  if (alpha == cached_alpha) return cached_scale;

  const double am = alpha - 1.0;
  const double lambda = std::sqrt(2.0 * alpha - 1.0);
  const double lp = log_peak(alpha);
  const double x_hi = am + 80.0 * std::sqrt(alpha) + 80.0;
  constexpr int kPoints = 200001;
  double max_log_ratio = 0.0;
  for (int i = 1; i < kPoints; ++i) {
    const double x = x_hi * i / (kPoints - 1.0);
    const double d = (x - am) / lambda;
    const double lr = log_target(alpha, x) - (lp - std::log1p(d * d));
    if (lr > max_log_ratio) max_log_ratio = lr;
  }
  cached_alpha = alpha;
  cached_scale = std::exp(max_log_ratio);
  return cached_scale;
}

double log_cauchy_hat(double alpha, double x) {
  if (x < 0.0) throw std::domain_error("log_cauchy_hat: x >= 0 required");
  const double am = alpha - 1.0;
  const double lambda = std::sqrt(2.0 * alpha - 1.0);
  const double d = (x - am) / lambda;
  return std::log(cauchy_hat_scale(alpha)) + log_peak(alpha) -
         std::log1p(d * d);
}

double log_best_hat(double alpha, double x) {
  if (x < 0.0) throw std::domain_error("log_best_hat: x >= 0 required");
  const double eta = std::sqrt((3.0 * alpha - 0.75) / 2.0);
  const double t = (x - (alpha - 1.0)) / eta;
  return log_peak(alpha) - 1.5 * std::log1p(0.5 * t * t);
}

SampleBatch sample_cheng(double alpha, UniformSource& src, std::size_t count) {
  require_alpha_above_one(alpha, "sample_cheng");
  const double lambda = std::sqrt(2.0 * alpha - 1.0);
  const double inv_lambda = 1.0 / lambda;
  const double log_k1 = std::log(4.0) + (alpha + lambda) * std::log(alpha) - alpha;
  const double log_mu = lambda * std::log(alpha);

  SampleBatch batch;
  batch.values.reserve(count);
  while (batch.values.size() < count) {
    const double u = src.next();
    const double logit = std::log(u / (1.0 - u));
    const double x = alpha * std::exp(inv_lambda * logit);
    ++batch.proposed;
    const double l = log_mu + softplus(lambda * std::log(x / alpha));
    const double log_hat = log_k1 + (lambda - 1.0) * std::log(x) - 2.0 * l;
    if (std::log(src.next()) <= log_target(alpha, x) - log_hat) {
      batch.values.push_back(x);
      ++batch.accepted;
    }
  }
  return batch;
}

double theoretical_ar_cheng(double alpha) {
  require_alpha_above_one(alpha, "theoretical_ar_cheng");
  const double lambda = std::sqrt(2.0 * alpha - 1.0);
  return std::exp(ln_gamma(alpha) + std::log(lambda) - std::log(4.0) -
                  alpha * std::log(alpha) + alpha);
}

SampleBatch sample_ahrens_cauchy(double alpha, UniformSource& src,
                                 std::size_t count) {
  require_alpha_above_one(alpha, "sample_ahrens_cauchy");
  const double am = alpha - 1.0;
  const double lambda = std::sqrt(2.0 * alpha - 1.0);
  const double log_scaled_peak = std::log(cauchy_hat_scale(alpha)) + log_peak(alpha);
  // Inversion of the Cauchy CDF restricted to x >= 0.
  const double theta_lo = -std::atan(am / lambda);
  const double theta_span = M_PI / 2.0 - theta_lo;

  SampleBatch batch;
  batch.values.reserve(count);
  while (batch.values.size() < count) {
    const double theta = theta_lo + theta_span * src.next();
    const double x = am + lambda * std::tan(theta);
    ++batch.proposed;
    const double d = (x - am) / lambda;
    const double log_hat = log_scaled_peak - std::log1p(d * d);
    if (std::log(src.next()) <= log_target(alpha, x) - log_hat) {
      batch.values.push_back(x);
      ++batch.accepted;
    }
  }
  return batch;
}

SampleBatch sample_best(double alpha, UniformSource& src, std::size_t count) {
  require_alpha_above_one(alpha, "sample_best");
  const double am = alpha - 1.0;
  const double eta = std::sqrt((3.0 * alpha - 0.75) / 2.0);
  const double log_k3 = log_peak(alpha);

  SampleBatch batch;
  batch.values.reserve(count);
  while (batch.values.size() < count) {
    const double u = src.next();
    const double t = (2.0 * u - 1.0) / std::sqrt(2.0 * u * (1.0 - u));
    const double x = am + eta * t;
    // The hat extends over the whole line; negative draws are redrawn
    // without counting so the rate matches the x >= 0 hat area.
    if (x < 0.0) continue;
    ++batch.proposed;
    const double log_hat = log_k3 - 1.5 * std::log1p(0.5 * t * t);
    if (std::log(src.next()) <= log_target(alpha, x) - log_hat) {
      batch.values.push_back(x);
      ++batch.accepted;
    }
  }
  return batch;
}

RouBounds rou_bounds(double alpha) {
  require_alpha_above_one(alpha, "rou_bounds");
  const double am = alpha - 1.0;
  const double lq0 = log_peak(alpha);
  // ln q(x) - ln q(0), with q(x) = p(x + mode).
  auto log_q_rel = [alpha, am, lq0](double x) {
    return x + am > 0.0 ? (alpha - 1.0) * std::log(x + am) - (x + am) - lq0
                        : -kInf;
  };

  constexpr double kTol = 1e-10;
  const double root = std::sqrt(2.0 * alpha - 1.0);

  // sup_{x>0} x * sqrt(q(x)/q(0)); the objective is unimodal with its
  // stationary point at 1 + sqrt(2*alpha - 1).
  auto neg_obj_pos = [&](double x) { return -(std::log(x) + 0.5 * log_q_rel(x)); };
  const double xp = golden_section_min(neg_obj_pos, 1e-9, 4.0 * (1.0 + root), kTol);
  const double v_plus_scaled = std::exp(std::log(xp) + 0.5 * log_q_rel(xp));

  // inf_{x<0} x * sqrt(q(x)/q(0)) over (-mode, 0).
  auto neg_obj_neg = [&](double x) { return -(std::log(-x) + 0.5 * log_q_rel(x)); };
  const double lo = -am * (1.0 - 1e-12);
  const double hi = -am * 1e-12;
  const double xm = golden_section_min(neg_obj_neg, lo, hi,
                                       std::min(kTol, (hi - lo) * 1e-8));
  const double v_minus_scaled = -std::exp(std::log(-xm) + 0.5 * log_q_rel(xm));

  RouBounds b;
  b.mode = am;
  b.log_u_max = 0.5 * lq0;
  b.u_max = std::exp(b.log_u_max);
  b.v_plus_scaled = v_plus_scaled;
  b.v_minus_scaled = v_minus_scaled;
  b.v_plus = std::exp(b.log_u_max + std::log(v_plus_scaled));
  b.v_minus = -std::exp(b.log_u_max + std::log(-v_minus_scaled));
  return b;
}

SampleBatch sample_rou(double alpha, UniformSource& src, std::size_t count) {
  require_alpha_above_one(alpha, "sample_rou");
  const RouBounds b = rou_bounds(alpha);
  const double am = b.mode;
  const double lq0 = log_peak(alpha);
  const double span = b.v_plus_scaled - b.v_minus_scaled;

  SampleBatch batch;
  batch.values.reserve(count);
  while (batch.values.size() < count) {
    const double u = src.next();  // u / u_max, in (0,1)
    const double v = b.v_minus_scaled + span * src.next();
    ++batch.proposed;
    const double x0 = v / u;
    if (x0 + am <= 0.0) continue;
    const double lq_rel = (alpha - 1.0) * std::log(x0 + am) - (x0 + am) - lq0;
    if (2.0 * std::log(u) <= lq_rel) {
      batch.values.push_back(x0 + am);
      ++batch.accepted;
    }
  }
  return batch;
}

double asymptotic_ar(MethodId id) {
  switch (id) {
    case MethodId::M1: return 1.0;
    case MethodId::M2LogLogistic: return std::sqrt(M_PI) / 2.0;
    case MethodId::M3Cauchy: return 1.0 / std::sqrt(M_PI);
    case MethodId::M4TStudent: return std::sqrt(M_PI / 6.0);
    case MethodId::M5Rou: return std::sqrt(M_E * M_PI) / 4.0;
  }
  throw std::invalid_argument("asymptotic_ar: bad id");
}

}  // namespace gammagen

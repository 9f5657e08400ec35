#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "gammagen/baselines.hpp"
#include "gammagen/gamma_core.hpp"
#include "gammagen/rng.hpp"
#include "gammagen/stats.hpp"
#include "gammagen/sweep.hpp"

using namespace gammagen;

namespace {

double ks_against_gamma(std::vector<double> values, double alpha) {
  std::sort(values.begin(), values.end());
  const GammaParams p(alpha, 1.0);
  return ks_statistic(values, [&](double x) { return gamma_cdf(p, x); });
}

void check_hat_dominates(double alpha, const LogDensity& log_hat) {
  const GammaParams p(alpha, 1.0);
  const EnvelopeReport r =
      envelope_check([p](double x) { return log_target_unnorm(p, x); }, log_hat,
                     0.0, gamma_quantile(p, 0.999999), 10000);
  INFO("alpha=" << alpha);
  CHECK(r.passed);
}

}  // namespace

TEST_CASE("method ids round-trip and reject junk") {
  for (MethodId m : {MethodId::M1, MethodId::M2LogLogistic, MethodId::M3Cauchy,
                     MethodId::M4TStudent, MethodId::M5Rou}) {
    CHECK(parse_method(method_name(m)) == m);
  }
  CHECK_THROWS_AS(parse_method("m6"), std::invalid_argument);
}

TEST_CASE("asymptotic acceptance rates") {
  CHECK(asymptotic_ar(MethodId::M1) == 1.0);
  CHECK(asymptotic_ar(MethodId::M2LogLogistic) ==
        doctest::Approx(0.8862269255).epsilon(1e-9));
  CHECK(asymptotic_ar(MethodId::M3Cauchy) ==
        doctest::Approx(0.5641895835).epsilon(1e-9));
  CHECK(asymptotic_ar(MethodId::M4TStudent) ==
        doctest::Approx(0.7236012546).epsilon(1e-9));
  CHECK(asymptotic_ar(MethodId::M5Rou) ==
        doctest::Approx(0.7305705913).epsilon(1e-9));
}

TEST_CASE("baselines reject alpha <= 1") {
  UniformSource src(0);
  CHECK_THROWS_AS(sample_cheng(1.0, src, 10), std::domain_error);
  CHECK_THROWS_AS(sample_ahrens_cauchy(0.9, src, 10), std::domain_error);
  CHECK_THROWS_AS(sample_best(1.0, src, 10), std::domain_error);
  CHECK_THROWS_AS(sample_rou(1.0, src, 10), std::domain_error);
  CHECK_THROWS_AS(rou_bounds(1.0), std::domain_error);
  CHECK_THROWS_AS(theoretical_ar_cheng(1.0), std::domain_error);
}

TEST_CASE("log-logistic sampler matches its closed-form AR") {
  UniformSource src(201);
  const SampleBatch batch = sample_cheng(5.0, src, 600000);
  CHECK(std::fabs(batch.empirical_ar() - theoretical_ar_cheng(5.0)) < 0.005);
}

TEST_CASE("log-logistic AR approaches sqrt(pi)/2") {
  CHECK(std::fabs(theoretical_ar_cheng(1000.0) - std::sqrt(M_PI) / 2.0) < 0.002);
  UniformSource src(202);
  const SampleBatch batch = sample_cheng(1000.0, src, 1000000);
  CHECK(std::fabs(batch.empirical_ar() - std::sqrt(M_PI) / 2.0) < 0.01);
}

TEST_CASE("log-logistic hat dominates the target") {
  for (double a : {1.5, 2.0, 5.0, 30.0}) {
    check_hat_dominates(a, [a](double x) { return log_cheng_hat(a, x); });
  }
}

TEST_CASE("Cauchy hat dominates the target") {
  for (double a : {2.0, 5.0, 10.0, 30.0}) {
    check_hat_dominates(a, [a](double x) { return log_cauchy_hat(a, x); });
  }
}

TEST_CASE("Cauchy sampler matches the quadrature AR") {
  const double theo = reference_ar(MethodId::M3Cauchy, 5.0).value;
  UniformSource src(203);
  const SampleBatch batch = sample_ahrens_cauchy(5.0, src, 600000);
  CHECK(std::fabs(batch.empirical_ar() - theo) < 0.005);
}

TEST_CASE("Cauchy AR approaches 1/sqrt(pi)") {
  UniformSource src(204);
  const SampleBatch batch = sample_ahrens_cauchy(1000.0, src, 1000000);
  CHECK(std::fabs(batch.empirical_ar() - 1.0 / std::sqrt(M_PI)) < 0.01);
}

TEST_CASE("t-hat dominates the target") {
  for (double a : {1.5, 2.0, 5.0, 30.0}) {
    check_hat_dominates(a, [a](double x) { return log_best_hat(a, x); });
  }
}

TEST_CASE("t-method beats the Gamma hat between the crossovers") {
  UniformSource src(205);
  const SampleBatch batch = sample_best(1.7, src, 600000);
  CHECK(batch.empirical_ar() > theoretical_ar_m1(1.7));
}

TEST_CASE("t-method matches the quadrature AR") {
  const double theo = reference_ar(MethodId::M4TStudent, 5.0).value;
  UniformSource src(206);
  const SampleBatch batch = sample_best(5.0, src, 600000);
  CHECK(std::fabs(batch.empirical_ar() - theo) < 0.005);
}

TEST_CASE("t-method AR approaches sqrt(pi/6)") {
  UniformSource src(207);
  const SampleBatch batch = sample_best(1000.0, src, 1000000);
  CHECK(std::fabs(batch.empirical_ar() - std::sqrt(M_PI / 6.0)) < 0.01);
}

TEST_CASE("ratio-of-uniforms bounds") {
  const RouBounds b2 = rou_bounds(2.0);
  CHECK(b2.u_max == doctest::Approx(std::exp(-0.5)).epsilon(1e-9));
  CHECK(b2.mode == 1.0);

  // The stationary points of x * sqrt(q(x)) solve a quadratic with roots
  // 1 +- sqrt(2*alpha - 1); use them as an independent oracle.
  for (double a : {1.5, 2.0, 10.0, 30.0}) {
    const RouBounds b = rou_bounds(a);
    CHECK(b.v_minus <= 0.0);
    CHECK(b.v_plus > 0.0);
    CHECK(std::isfinite(b.v_minus));
    CHECK(std::isfinite(b.v_plus));
    const double am = a - 1.0;
    auto v_at = [&](double x) {
      return x * std::exp(0.5 * ((a - 1.0) * std::log(x + am) - (x + am)));
    };
    const double root = std::sqrt(2.0 * a - 1.0);
    CHECK(b.v_plus == doctest::Approx(v_at(1.0 + root)).epsilon(1e-9));
    CHECK(b.v_minus == doctest::Approx(v_at(1.0 - root)).epsilon(1e-9));
  }
}

TEST_CASE("acceptance region boundary stays inside the rectangle") {
  for (double a : {1.5, 2.0, 10.0, 30.0}) {
    const RouBounds b = rou_bounds(a);
    const double am = b.mode;
    const double lq0 = 2.0 * b.log_u_max;
    const double hi = am + 50.0 * std::sqrt(a) + 50.0;
    for (int i = 1; i < 100000; ++i) {
      const double x0 = -am + (hi + am) * i / 100000.0;
      const double u =
          std::exp(0.5 * ((a - 1.0) * std::log(x0 + am) - (x0 + am) - lq0));
      const double v = x0 * u;
      REQUIRE(u <= 1.0 + 1e-12);
      REQUIRE(v <= b.v_plus_scaled * (1.0 + 1e-12));
      REQUIRE(v >= b.v_minus_scaled * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("ratio-of-uniforms AR is nearly flat in alpha") {
  std::vector<double> ars;
  for (double a : {2.0, 5.0, 10.0, 20.0, 30.0}) {
    UniformSource src(208);
    ars.push_back(sample_rou(a, src, 200000).empirical_ar());
  }
  const auto [lo, hi] = std::minmax_element(ars.begin(), ars.end());
  CHECK(*hi - *lo < 0.03);
}

TEST_CASE("ratio-of-uniforms AR approaches sqrt(e*pi)/4") {
  UniformSource src(209);
  const SampleBatch batch = sample_rou(1000.0, src, 1000000);
  CHECK(std::fabs(batch.empirical_ar() - std::sqrt(M_E * M_PI) / 4.0) < 0.01);
}

TEST_CASE("every baseline passes KS against the exact CDF") {
  UniformSource src(210);
  CHECK(ks_against_gamma(sample_cheng(2.5, src, 100000).values, 2.5) <
        ks_critical_1pct(100000));
  CHECK(ks_against_gamma(sample_ahrens_cauchy(4.0, src, 100000).values, 4.0) <
        ks_critical_1pct(100000));
  CHECK(ks_against_gamma(sample_best(1.5, src, 100000).values, 1.5) <
        ks_critical_1pct(100000));
  CHECK(ks_against_gamma(sample_rou(4.0, src, 100000).values, 4.0) <
        ks_critical_1pct(100000));
}

TEST_CASE("empirical and reference ARs agree across methods and shapes") {
  const std::vector<MethodId> methods{MethodId::M2LogLogistic, MethodId::M3Cauchy,
                                      MethodId::M4TStudent, MethodId::M5Rou};
  for (MethodId m : methods) {
    for (double a : {2.0, 3.0, 10.0}) {
      UniformSource src(211);
      const SampleBatch batch = sample_method(m, a, src, 600000);
      const double ref = reference_ar(m, a).value;
      INFO(method_name(m) << " alpha=" << a);
      CHECK(std::fabs(batch.empirical_ar() - ref) < 0.005);
    }
  }
}

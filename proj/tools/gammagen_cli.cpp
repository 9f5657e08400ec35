// Command-line front end: generate samples, run the acceptance-rate sweep,
// validate distributions, and check envelope domination.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gammagen/baselines.hpp"
#include "gammagen/gamma_core.hpp"
#include "gammagen/rng.hpp"
#include "gammagen/stats.hpp"
#include "gammagen/sweep.hpp"

namespace {

using namespace gammagen;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitIoError = 3;

std::string fmt9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

// Draws `n` variates for any method at the requested rate. Baselines run at
// beta = 1 and are rescaled by 1/beta.
SampleBatch draw(MethodId method, double alpha, double beta, UniformSource& src,
                 std::size_t n) {
  if (method == MethodId::M1) {
    return sample_m1(GammaParams(alpha, beta), src, n);
  }
  SampleBatch batch = sample_method(method, alpha, src, n);
  if (beta != 1.0) {
    for (double& v : batch.values) v /= beta;
  }
  return batch;
}

void check_domain(MethodId method, double alpha, double beta) {
  if (!(beta > 0.0)) throw CLI::ValidationError("--beta must be > 0");
  if (method == MethodId::M1) {
    if (!(alpha >= 1.0)) throw CLI::ValidationError("--alpha must be >= 1 for m1");
  } else if (!(alpha > 1.0)) {
    throw CLI::ValidationError("--alpha must be > 1 for m2..m5");
  }
}

int cmd_sample(MethodId method, double alpha, double beta, std::size_t n,
               std::uint64_t seed, const std::string& out_path) {
  UniformSource src(seed);
  const SampleBatch batch = draw(method, alpha, beta, src, n);

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot open '" << out_path << "'\n";
      return kExitIoError;
    }
    out = &file;
  }
  for (double v : batch.values) *out << fmt9(v) << '\n';
  *out << "# proposed=" << batch.proposed << " accepted=" << batch.accepted
       << " empirical_ar=" << fmt9(batch.empirical_ar()) << '\n';
  out->flush();
  if (!*out) {
    std::cerr << "error: write failed\n";
    return kExitIoError;
  }
  return kExitOk;
}

int cmd_sweep(const SweepConfig& config, const std::string& out_path,
              const std::string& plot_path) {
  const std::vector<ARSweepRecord> rows = run_sweep(config);

  {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) {
        std::cerr << "error: cannot open '" << out_path << "'\n";
        return kExitIoError;
      }
      out = &file;
    }
    write_sweep_csv(*out, rows);
    out->flush();
    if (!*out) {
      std::cerr << "error: write failed\n";
      return kExitIoError;
    }
  }
  if (!plot_path.empty()) {
    std::ofstream file(plot_path);
    if (!file) {
      std::cerr << "error: cannot open '" << plot_path << "'\n";
      return kExitIoError;
    }
    write_plot_data(file, rows);
  }

  // Post-write pass: every row's empirical rate must sit near its reference.
  int bad = 0;
  for (const auto& r : rows) {
    if (std::fabs(r.empirical_ar - r.theoretical_ar) >= 0.005) {
      std::cerr << "warning: " << method_name(r.method) << " alpha="
                << fmt9(r.alpha) << " empirical_ar=" << fmt9(r.empirical_ar)
                << " deviates from " << r.ar_source << " ar="
                << fmt9(r.theoretical_ar) << '\n';
      ++bad;
    }
  }
  return bad == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_validate(MethodId method, double alpha, double beta, std::size_t n,
                 std::uint64_t seed, double assume_alpha) {
  UniformSource src(seed);
  const SampleBatch batch = draw(method, alpha, beta, src, n);
  const GammaParams assumed(assume_alpha > 0.0 ? assume_alpha : alpha, beta);
  const GofReport r = gof_report(batch.values, assumed);

  std::cout << "n=" << r.n << '\n'
            << "ks_statistic=" << fmt9(r.ks_stat) << '\n'
            << "ks_critical_1pct=" << fmt9(r.ks_critical) << '\n'
            << "mean_err=" << fmt9(r.mean_err) << '\n'
            << "var_err=" << fmt9(r.var_err) << '\n'
            << "skew_err=" << fmt9(r.skew_err) << '\n'
            << "passed=" << (r.passed ? "true" : "false") << '\n';
  return r.passed ? kExitOk : kExitCheckFailed;
}

int cmd_envelope(MethodId method, double alpha, double beta,
                 std::size_t grid_size) {
  if (method == MethodId::M5Rou) {
    // No explicit hat; scan the acceptance-region boundary against the
    // bounding rectangle instead.
    const RouBounds b = rou_bounds(alpha);
    const double am = b.mode;
    const double lq0 = b.log_u_max * 2.0;
    const double hi = am + 50.0 * std::sqrt(alpha) + 50.0;
    const std::size_t points = 1000000;
    double worst = 0.0;
    for (std::size_t i = 1; i < points; ++i) {
      const double x0 = -am + (hi + am) * static_cast<double>(i) / points;
      const double u = std::exp(
          0.5 * ((alpha - 1.0) * std::log(x0 + am) - (x0 + am) - lq0));
      const double v = x0 * u;
      worst = std::max(worst, u - 1.0);
      worst = std::max(worst, (v - b.v_plus_scaled) / b.v_plus_scaled);
      worst = std::max(worst, (b.v_minus_scaled - v) / -b.v_minus_scaled);
    }
    const bool passed = worst <= 1e-12;
    std::cout << "boundary_points=" << points << '\n'
              << "max_relative_violation=" << fmt9(std::max(worst, 0.0)) << '\n'
              << "passed=" << (passed ? "true" : "false") << '\n';
    return passed ? kExitOk : kExitCheckFailed;
  }

  const GammaParams params(alpha, beta);
  const double x_hi = gamma_quantile(params, 0.999999);
  LogDensity log_target = [params](double x) {
    return log_target_unnorm(params, x);
  };
  LogDensity log_hat;
  switch (method) {
    case MethodId::M1: {
      const ProposalParams prop = build_proposal(params);
      log_hat = [prop](double x) { return log_proposal_unnorm(prop, x); };
      break;
    }
    case MethodId::M2LogLogistic:
      log_hat = [alpha](double x) { return log_cheng_hat(alpha, x); };
      break;
    case MethodId::M3Cauchy:
      log_hat = [alpha](double x) { return log_cauchy_hat(alpha, x); };
      break;
    case MethodId::M4TStudent:
      log_hat = [alpha](double x) { return log_best_hat(alpha, x); };
      break;
    default:
      throw CLI::ValidationError("envelope: method must be m1..m5");
  }
  const EnvelopeReport r = envelope_check(log_target, log_hat, 0.0, x_hi,
                                          grid_size);
  std::cout << "grid_size=" << r.grid_size << '\n'
            << "x_lo=" << fmt9(r.x_lo) << '\n'
            << "x_hi=" << fmt9(r.x_hi) << '\n'
            << "max_relative_violation=" << fmt9(r.max_relative_violation)
            << '\n';
  std::cout << "tangency_points=";
  for (std::size_t i = 0; i < r.tangency_points.size(); ++i) {
    std::cout << (i ? ";" : "") << fmt9(r.tangency_points[i]);
  }
  std::cout << '\n' << "passed=" << (r.passed ? "true" : "false") << '\n';
  return r.passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gamma(alpha, beta) rejection samplers: integer-shape Gamma "
               "hat plus four literature baselines"};
  app.require_subcommand(1);

  std::string method_str = "m1";
  double alpha = 2.0;
  double beta = 1.0;
  std::size_t n = 1000;
  std::uint64_t seed = 0;
  std::string out_path;

  auto* sample = app.add_subcommand("sample", "Generate variates");
  sample->add_option("--method", method_str, "m1..m5")->capture_default_str();
  sample->add_option("--alpha", alpha, "shape, >= 1 (m1) or > 1 (m2..m5)")
      ->required();
  sample->add_option("--beta", beta, "rate, > 0")->capture_default_str();
  sample->add_option("--n", n, "number of variates")->capture_default_str();
  sample->add_option("--seed", seed, "stream seed")->capture_default_str();
  sample->add_option("--out", out_path, "output file (default stdout)");

  SweepConfig sweep_config;
  std::string methods_str = "m1,m2,m3,m4,m5";
  std::string plot_path;
  auto* sweep = app.add_subcommand("sweep", "Acceptance-rate sweep over alpha");
  sweep->add_option("--alpha-min", sweep_config.alpha_min)->capture_default_str();
  sweep->add_option("--alpha-max", sweep_config.alpha_max)->capture_default_str();
  sweep->add_option("--alpha-step", sweep_config.alpha_step)->capture_default_str();
  sweep->add_option("--n", sweep_config.n, "samples per cell")->capture_default_str();
  sweep->add_option("--methods", methods_str, "comma-separated subset of m1..m5")
      ->capture_default_str();
  sweep->add_option("--seed", sweep_config.seed)->capture_default_str();
  sweep->add_option("--threads", sweep_config.threads, "0 = all cores")
      ->capture_default_str();
  sweep->add_option("--out", out_path, "CSV output file (default stdout)");
  sweep->add_option("--plot-data", plot_path,
                    "also write per-method AR columns aligned on alpha");

  double assume_alpha = 0.0;
  auto* validate = app.add_subcommand("validate", "KS + moment checks");
  validate->add_option("--method", method_str)->capture_default_str();
  validate->add_option("--alpha", alpha)->required();
  validate->add_option("--beta", beta)->capture_default_str();
  validate->add_option("--n", n, "sample size, >= 1000")->capture_default_str();
  validate->add_option("--seed", seed)->capture_default_str();
  validate->add_option("--assume-alpha", assume_alpha,
                       "test the samples against this shape instead");

  std::size_t grid_size = 10000;
  auto* envelope = app.add_subcommand("envelope", "Hat-domination check");
  envelope->add_option("--method", method_str)->capture_default_str();
  envelope->add_option("--alpha", alpha)->required();
  envelope->add_option("--beta", beta, "rate (m1 only; baselines are beta = 1)")
      ->capture_default_str();
  envelope->add_option("--grid-size", grid_size)->capture_default_str();

  try {
    app.parse(argc, argv);

    const MethodId method = parse_method(method_str);
    if (sample->parsed()) {
      check_domain(method, alpha, beta);
      if (n < 1) throw CLI::ValidationError("--n must be >= 1");
      return cmd_sample(method, alpha, beta, n, seed, out_path);
    }
    if (sweep->parsed()) {
      sweep_config.methods.clear();
      std::stringstream ss(methods_str);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) sweep_config.methods.push_back(parse_method(tok));
      }
      if (sweep_config.methods.empty()) {
        throw CLI::ValidationError("--methods must name at least one method");
      }
      return cmd_sweep(sweep_config, out_path, plot_path);
    }
    if (validate->parsed()) {
      check_domain(method, alpha, beta);
      if (n < 1000) throw CLI::ValidationError("--n must be >= 1000");
      if (assume_alpha != 0.0 && !(assume_alpha >= 1.0)) {
        throw CLI::ValidationError("--assume-alpha must be >= 1");
      }
      return cmd_validate(method, alpha, beta, n, seed, assume_alpha);
    }
    if (envelope->parsed()) {
      check_domain(method, alpha, beta);
      if (method != MethodId::M1 && beta != 1.0) {
        throw CLI::ValidationError("baseline envelopes are defined at beta = 1");
      }
      if (grid_size < 1000) {
        throw CLI::ValidationError("--grid-size must be >= 1000");
      }
      return cmd_envelope(method, alpha, beta, grid_size);
    }
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitBadArgs;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArgs;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitBadArgs;
}

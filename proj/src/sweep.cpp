#include "gammagen/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "gammagen/special_functions.hpp"
#include "gammagen/stats.hpp"

namespace gammagen {

namespace {

std::string fmt9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace

SampleBatch sample_method(MethodId method, double alpha, UniformSource& src,
                          std::size_t count) {
  switch (method) {
    case MethodId::M1:
      return sample_m1(GammaParams(alpha, 1.0), src, count);
    case MethodId::M2LogLogistic:
      return sample_cheng(alpha, src, count);
    case MethodId::M3Cauchy:
      return sample_ahrens_cauchy(alpha, src, count);
    case MethodId::M4TStudent:
      return sample_best(alpha, src, count);
    case MethodId::M5Rou:
      return sample_rou(alpha, src, count);
  }
  throw std::invalid_argument("sample_method: bad method");
}

ReferenceAr reference_ar(MethodId method, double alpha) {
  switch (method) {
    case MethodId::M1:
      return {theoretical_ar_m1(alpha), "formula"};
    case MethodId::M2LogLogistic:
      return {theoretical_ar_cheng(alpha), "formula"};
    case MethodId::M3Cauchy: {
      const double am = alpha - 1.0;
      const double lambda = std::sqrt(2.0 * alpha - 1.0);
      const double upper = am + 50.0 * lambda;
      // Analytic Cauchy tail beyond the quadrature window.
      const double tail = std::exp(log_cauchy_hat(alpha, am)) * lambda *
                          (M_PI / 2.0 - std::atan((upper - am) / lambda));
      const double ar = quadrature_ar(
          [alpha](double x) { return std::exp(log_target_unnorm(GammaParams(alpha, 1.0), x)); },
          [alpha](double x) { return std::exp(log_cauchy_hat(alpha, x)); },
          upper, tail);
      return {ar, "quadrature"};
    }
    case MethodId::M4TStudent: {
      const double am = alpha - 1.0;
      const double eta = std::sqrt((3.0 * alpha - 0.75) / 2.0);
      const double upper = am + 50.0 * eta;
      const double tu = (upper - am) / eta;
      // Analytic t2 tail: integral of (1 + t^2/2)^(-3/2) is sqrt(2) t / sqrt(2 + t^2).
      const double tail = std::exp(log_best_hat(alpha, am)) * eta *
                          std::sqrt(2.0) * (1.0 - tu / std::sqrt(2.0 + tu * tu));
      const double ar = quadrature_ar(
          [alpha](double x) { return std::exp(log_target_unnorm(GammaParams(alpha, 1.0), x)); },
          [alpha](double x) { return std::exp(log_best_hat(alpha, x)); },
          upper, tail);
      return {ar, "quadrature"};
    }
    case MethodId::M5Rou: {
      // Acceptance-region area is half the integral of q; the rectangle
      // area is u_max * (v_plus - v_minus).
      const RouBounds b = rou_bounds(alpha);
      const double upper = (alpha - 1.0) + 50.0 * std::sqrt(alpha) + 50.0;
      // x = t^2 keeps the integrand smooth at the origin for alpha near 1.
      const double i_target = integrate(
          [alpha](double t) {
            return 2.0 * t *
                   std::exp(log_target_unnorm(GammaParams(alpha, 1.0), t * t));
          },
          0.0, std::sqrt(upper));
      const double span = b.v_plus_scaled - b.v_minus_scaled;
      const double ar = std::exp(std::log(0.5 * i_target) - 2.0 * b.log_u_max -
                                 std::log(span));
      return {ar, "quadrature"};
    }
  }
  throw std::invalid_argument("reference_ar: bad method");
}

std::vector<ARSweepRecord> run_sweep(const SweepConfig& config) {
  if (!(config.alpha_min >= 1.0) || !(config.alpha_min < config.alpha_max) ||
      !(config.alpha_step > 0.0)) {
    throw std::domain_error("run_sweep: need 1 <= alpha_min < alpha_max, step > 0");
  }
  if (config.n < 1000) throw std::domain_error("run_sweep: n >= 1000 required");

  std::vector<double> alphas;
  for (std::size_t k = 0;; ++k) {
    const double a = config.alpha_min + config.alpha_step * static_cast<double>(k);
    if (a > config.alpha_max + 1e-9) break;
    alphas.push_back(a);
  }

  struct Cell {
    MethodId method;
    double alpha;
    std::uint64_t stream_index;
  };
  std::vector<Cell> cells;
  for (const MethodId m : config.methods) {
    const auto ord = static_cast<std::uint64_t>(m);
    for (std::size_t k = 0; k < alphas.size(); ++k) {
      if (m != MethodId::M1 && !(alphas[k] > 1.0)) continue;
      cells.push_back({m, alphas[k], ord * 1000000 + k});
    }
  }

  std::vector<ARSweepRecord> rows(cells.size());
  const UniformSource root(config.seed);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      const Cell& c = cells[i];
      UniformSource src = root.substream(c.stream_index);
      const SampleBatch batch = sample_method(c.method, c.alpha, src, config.n);
      const ReferenceAr ref = reference_ar(c.method, c.alpha);
      rows[i] = {c.method,          c.alpha,       1.0,
                 config.n,          batch.proposed, batch.accepted,
                 batch.empirical_ar(), ref.value,  ref.source,
                 config.seed};
    }
  };

  unsigned threads = config.threads ? config.threads
                                    : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, cells.size() ? cells.size() : 1);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<ARSweepRecord>& rows) {
  out << "method,alpha,beta,n,proposed,accepted,empirical_ar,theoretical_ar,"
         "ar_source,seed\n";
  for (const auto& r : rows) {
    out << method_name(r.method) << ',' << fmt9(r.alpha) << ',' << fmt9(r.beta)
        << ',' << r.n << ',' << r.proposed << ',' << r.accepted << ','
        << fmt9(r.empirical_ar) << ',' << fmt9(r.theoretical_ar) << ','
        << r.ar_source << ',' << r.seed << '\n';
  }
}

void write_plot_data(std::ostream& out, const std::vector<ARSweepRecord>& rows) {
  // alpha rows, one empirical-AR column per method present.
  std::vector<MethodId> methods;
  std::map<double, std::map<MethodId, double>> table;
  for (const auto& r : rows) {
    if (table[r.alpha].emplace(r.method, r.empirical_ar).second) {
      bool known = false;
      for (MethodId m : methods) known = known || m == r.method;
      if (!known) methods.push_back(r.method);
    }
  }
  std::sort(methods.begin(), methods.end(), [](MethodId a, MethodId b) {
    return static_cast<int>(a) < static_cast<int>(b);
  });
  out << "alpha";
  for (MethodId m : methods) out << ',' << method_name(m);
  out << '\n';
  for (const auto& [alpha, by_method] : table) {
    out << fmt9(alpha);
    for (MethodId m : methods) {
      out << ',';
      auto it = by_method.find(m);
      if (it != by_method.end()) out << fmt9(it->second);
    }
    out << '\n';
  }
}

}  // namespace gammagen

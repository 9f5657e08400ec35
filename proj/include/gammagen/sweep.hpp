#ifndef GAMMAGEN_SWEEP_HPP
#define GAMMAGEN_SWEEP_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "gammagen/baselines.hpp"

namespace gammagen {

/// Dispatch to the sampler for `method` at beta = 1.
SampleBatch sample_method(MethodId method, double alpha, UniformSource& src,
                          std::size_t count);

/// Reference acceptance rate for one sweep cell: closed form for M1/M2
/// ("formula"), quadrature oracle for M3/M4, acceptance-region over
/// rectangle area for M5 ("quadrature").
struct ReferenceAr {
  double value;
  const char* source;  // "formula" or "quadrature"
};
ReferenceAr reference_ar(MethodId method, double alpha);

struct ARSweepRecord {
  MethodId method;
  double alpha;
  double beta;
  std::size_t n;
  std::uint64_t proposed;
  std::uint64_t accepted;
  double empirical_ar;
  double theoretical_ar;
  const char* ar_source;
  std::uint64_t seed;
};

struct SweepConfig {
  double alpha_min = 1.0;
  double alpha_max = 30.0;
  double alpha_step = 0.05;
  std::size_t n = 600000;
  std::vector<MethodId> methods = {MethodId::M1, MethodId::M2LogLogistic,
                                   MethodId::M3Cauchy, MethodId::M4TStudent,
                                   MethodId::M5Rou};
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0 = hardware_concurrency
};

/// Runs every (method, alpha) cell on its own substream, so results do not
/// depend on thread count or scheduling. Rows come back sorted by method
/// then alpha. Baselines are skipped at alpha <= 1 (their domain is
/// alpha > 1).
std::vector<ARSweepRecord> run_sweep(const SweepConfig& config);

/// Fixed, versioned schema:
/// method,alpha,beta,n,proposed,accepted,empirical_ar,theoretical_ar,ar_source,seed
/// with floats at 9 significant digits.
void write_sweep_csv(std::ostream& out, const std::vector<ARSweepRecord>& rows);

/// Per-method empirical-AR columns aligned on alpha, for external plotting.
void write_plot_data(std::ostream& out, const std::vector<ARSweepRecord>& rows);

}  // namespace gammagen

#endif

#include "gammagen/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace gammagen {

namespace {

// Lanczos coefficients, g = 7.
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // ln(2*pi)/2

constexpr int kMaxIter = 500;
constexpr double kEps = 1e-16;

// Series representation of P(a,x), valid and fast for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double term = 1.0 / a;
  double sum = term;
  for (int i = 0; i < kMaxIter; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEps) {
      return sum * std::exp(-x + a * std::log(x) - ln_gamma(a));
    }
  }
  throw std::runtime_error("reg_lower_incomplete_gamma: series did not converge");
}

// Continued fraction for Q(a,x) by modified Lentz, valid for x >= a + 1.
double gamma_q_continued_fraction(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    const double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) {
      return h * std::exp(-x + a * std::log(x) - ln_gamma(a));
    }
  }
  throw std::runtime_error(
      "reg_lower_incomplete_gamma: continued fraction did not converge");
}

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("ln_gamma: requires x > 0");
  if (x < 0.5) {
    // Reflection keeps the Lanczos argument away from the pole.
    return std::log(M_PI / std::sin(M_PI * x)) - ln_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  double sum = kLanczos[0];
  for (int i = 1; i < 9; ++i) sum += kLanczos[i] / (z + i);
  const double t = z + 7.5;
  return kHalfLogTwoPi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

double reg_lower_incomplete_gamma(double a, double x) {
  if (!(a > 0.0)) throw std::domain_error("reg_lower_incomplete_gamma: a > 0");
  if (x < 0.0) throw std::domain_error("reg_lower_incomplete_gamma: x >= 0");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_continued_fraction(a, x);
}

}  // namespace gammagen

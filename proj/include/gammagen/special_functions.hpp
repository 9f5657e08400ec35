#ifndef GAMMAGEN_SPECIAL_FUNCTIONS_HPP
#define GAMMAGEN_SPECIAL_FUNCTIONS_HPP

namespace gammagen {

/// ln Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 coefficients).
/// Absolute error below 1e-10 on [1, 1e3]. Throws std::domain_error for
/// x <= 0.
double ln_gamma(double x);

/// Regularized lower incomplete gamma P(a, x) for a > 0, x >= 0.
/// Series expansion for x < a + 1, continued fraction (modified Lentz)
/// otherwise. Throws std::domain_error on bad arguments and
/// std::runtime_error if 500 iterations do not converge.
double reg_lower_incomplete_gamma(double a, double x);

}  // namespace gammagen

#endif

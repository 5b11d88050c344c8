#pragma once

namespace pminet {

/// Digamma psi(x) for x > 0.  Arguments below 10 are lifted with the
/// recurrence psi(x+1) = psi(x) + 1/x, then the asymptotic expansion
/// ln x - 1/(2x) - sum B_2k / (2k x^2k) is applied through the x^-12 term.
/// Relative error stays below 1e-13 across the positive axis.
double digamma(double x);

/// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a)
/// for a > 0, x >= 0.  Series expansion for x < a + 1, continued fraction
/// otherwise.
double gamma_p(double a, double x);

/// Quantile of the Gamma(shape, scale) distribution: the x with
/// P(shape, x / scale) = p.  Requires p in [0, 1); returns 0 at p = 0.
double gamma_quantile(double shape, double scale, double p);

}  // namespace pminet

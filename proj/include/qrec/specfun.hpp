#pragma once

#include <array>
#include <cstddef>
#include <functional>

namespace qrec {

// Gamma function; exact integer factorial for n <= 21 (products stay exactly
// representable in double through 20!).
double gamma_fn(double a);
double lgamma_fn(double a);

// Regularized incomplete gamma: P(a,x) lower, Q(a,x) upper, P + Q = 1.
double reg_gamma_p(double a, double x);
double reg_gamma_q(double a, double x);

// Chi-square survival function and critical value: sf(crit, df) == alpha.
double chi2_sf(double x, double df);
double chi2_critical(double df, double alpha);

// Quantile of the gamma law with unit rate: reg_gamma_p(a, result) == q.
double gamma_quantile(double a, double q);

// One-sample KS thresholds: c(alpha)/sqrt(n) with c = sqrt(-ln(alpha/2)/2).
double ks_threshold(std::size_t n, double alpha);
double ks_two_threshold(std::size_t na, std::size_t nb, double alpha);

// Adaptive Simpson quadrature, relative tolerance on the whole integral.
double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    double rel_tol = 1e-8);
double integrate_2d(const std::function<double(double, double)>& f, double ax, double bx,
                    double ay, double by, double rel_tol = 1e-7);

// Tensor Gauss-Legendre over a 4D box with an internal order check; throws if
// the two orders disagree beyond rel_tol (integrand assumed smooth on the box).
double integrate_box4(const std::function<double(double, double, double, double)>& f,
                      const std::array<double, 4>& lo, const std::array<double, 4>& hi,
                      double rel_tol = 1e-6);

}  // namespace qrec

#pragma once

// Real-order special functions used throughout the library.
//
// Everything here is a pure function of its arguments and may be called
// concurrently from any number of threads.

#include <functional>
#include <vector>

namespace spiralbox::specfun {

/// ln Gamma(x) for x > 0 (Lanczos, g = 7, nine terms).
/// Throws std::domain_error for x <= 0 or non-finite x.
double log_gamma(double x);

/// Bessel function of the first kind J_nu(x) for real order nu >= 0 and x >= 0.
///
/// Small arguments (x^2/4 <= nu + 1, or x <= 2) are summed from the power
/// series with the leading term scaled through log_gamma. Everything else goes
/// through Miller's backward recurrence, normalized with the Neumann sum
///   (x/2)^mu = sum_k (mu + 2k) Gamma(mu + k) / k! J_{mu+2k}(x),
/// where mu is the fractional part of nu.
double bessel_j(double nu, double x);

/// dJ_nu/dx for x > 0.
/// nu >= 1: (J_{nu-1} - J_{nu+1}) / 2. nu < 1: (nu/x) J_nu - J_{nu+1}, which is
/// J_{nu-1} - (nu/x) J_nu with J_{nu-1} eliminated through the recurrence.
double bessel_j_derivative(double nu, double x);

/// J_{nu-1}(x) for x > 0. For nu < 1 the (negative) order is reached through
/// the three-term recurrence, J_{nu-1} = (2 nu / x) J_nu - J_{nu+1}.
double bessel_j_lower(double nu, double x);

/// n-th positive zero j_{nu,n} (n >= 1), absolute accuracy ~1e-12.
double bessel_j_zero(double nu, int n);

/// The first `count` positive zeros of J_nu in increasing order.
/// Zeros are bracketed by scanning from nu + 0.5 in steps of pi/4, bisected
/// to 1e-6 and then polished with Newton steps.
std::vector<double> bessel_j_zeros(double nu, int count);

/// Generalized Laguerre polynomial L_n^(alpha)(x) by the three-term recurrence
///   (k+1) L_{k+1} = (2k + 1 + alpha - x) L_k - (k + alpha) L_{k-1}.
double laguerre(int degree, double alpha, double x);

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 200000;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
  bool converged = false;
};

/// Adaptive Simpson quadrature of f over [a, b].
///
/// The interval is first split into 16 equal panels; each panel is bisected
/// until the Richardson error estimate |S2 - S1| / 15 falls below its share
/// of max(abs_tol, rel_tol * |I|). A non-finite value at the left endpoint is
/// treated as an integrable singularity and replaced by 0. When the
/// subdivision budget runs out the partial result is returned with
/// converged = false.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureSpec& spec = {});

}  // namespace spiralbox::specfun

#pragma once

// Test-only reference implementations. Nothing here calls into the library.

#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

// Direct power series for J_nu(x) in long double, fixed term count.
inline long double bessel_series(long double nu, long double x, int terms = 80) {
  long double sum = 0.0L;
  const long double half = x / 2.0L;
  for (int k = 0; k < terms; ++k) {
    const long double log_term = (2.0L * k + nu) * std::log(half) -
                                 std::lgamma(static_cast<long double>(k) + 1.0L) -
                                 std::lgamma(static_cast<long double>(k) + nu + 1.0L);
    const long double term = std::exp(log_term);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

// Plain bisection of a bracketed sign change.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     int iterations = 200) {
  double f_lo = f(lo);
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if ((f_mid < 0) == (f_lo < 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Composite Simpson on n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += f(a + i * h) * ((i % 2) ? 4.0 : 2.0);
  return sum * h / 3.0;
}

}  // namespace oracle

#include "spiralbox/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace spiralbox::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_order(double nu, const char* who) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) {
    throw std::domain_error(std::string(who) +
                            ": order must be finite and non-negative");
  }
}

bool series_is_stable(double nu, double x) {
  // Past this point the terms of the series grow before they decay and the
  // alternating sum cancels.
  const double q = 0.25 * x * x;
  return x <= 2.0 || q <= nu + 1.0;
}

// sum_k (-1)^k (x/2)^(2k+nu) / (k! Gamma(k+nu+1))
double power_series(double nu, double x) {
  const long double half = 0.5L * x;
  const long double q = half * half;
  long double term =
      std::exp(static_cast<long double>(nu) * std::log(half) -
               static_cast<long double>(log_gamma(nu + 1.0)));
  if (term == 0.0L) return 0.0;
  long double sum = term;
  for (int k = 1; k < 1000; ++k) {
    term *= -q / (static_cast<long double>(k) * (k + nu));
    sum += term;
    if (std::fabs(term) <= 1e-21L * std::fabs(sum)) break;
  }
  return static_cast<double>(sum);
}

// Miller's algorithm: run the recurrence f_{j-1} = 2(mu+j)/x f_j - f_{j+1}
// downward from an order well past the turning point, where J is negligible,
// then fix the scale with the Neumann sum over the even offsets.
double backward_recurrence(double nu, double x) {
  const int whole = static_cast<int>(std::floor(nu));
  const double mu = nu - whole;
  const double reach = std::max(nu, x);
  int top = static_cast<int>(std::ceil(reach)) + 30 +
            static_cast<int>(std::ceil(6.0 * std::cbrt(reach)));
  top += top % 2;

  std::vector<double> f(static_cast<std::size_t>(top) + 2, 0.0);
  f[top] = 1e-30;
  constexpr double kRescaleAbove = 1e250;
  for (int j = top; j >= 1; --j) {
    f[j - 1] = 2.0 * (mu + j) / x * f[j] - f[j + 1];
    if (std::fabs(f[j - 1]) > kRescaleAbove) {
      for (int i = j - 1; i <= top; ++i) f[i] /= kRescaleAbove;
    }
  }

  // Weights relative to Gamma(mu + 1): w_0 = 1, w_{2k} = (mu + 2k) h_k,
  // h_1 = 1, h_k = h_{k-1} (mu + k - 1) / k.
  double norm = f[0];
  double h = 1.0;
  for (int k = 1; 2 * k <= top; ++k) {
    if (k > 1) h *= (mu + k - 1.0) / k;
    norm += (mu + 2.0 * k) * h * f[2 * k];
  }
  const double scale =
      std::exp(mu * std::log(0.5 * x) - log_gamma(mu + 1.0)) / norm;
  return f[whole] * scale;
}

}  // namespace

double bessel_j(double nu, double x) {
  check_order(nu, "bessel_j");
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw std::domain_error("bessel_j: argument must be finite and >= 0");
  }
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  if (series_is_stable(nu, x)) return power_series(nu, x);
  return backward_recurrence(nu, x);
}

double bessel_j_lower(double nu, double x) {
  check_order(nu, "bessel_j_lower");
  if (!(x > 0.0)) {
    throw std::domain_error("bessel_j_lower: argument must be positive");
  }
  if (nu >= 1.0) return bessel_j(nu - 1.0, x);
  return 2.0 * nu / x * bessel_j(nu, x) - bessel_j(nu + 1.0, x);
}

double bessel_j_derivative(double nu, double x) {
  check_order(nu, "bessel_j_derivative");
  if (!(x > 0.0)) {
    throw std::domain_error("bessel_j_derivative: argument must be positive");
  }
  if (nu >= 1.0) {
    return 0.5 * (bessel_j(nu - 1.0, x) - bessel_j(nu + 1.0, x));
  }
  return nu / x * bessel_j(nu, x) - bessel_j(nu + 1.0, x);
}

std::vector<double> bessel_j_zeros(double nu, int count) {
  check_order(nu, "bessel_j_zeros");
  if (count < 0) {
    throw std::invalid_argument("bessel_j_zeros: count must be >= 0");
  }
  std::vector<double> zeros;
  zeros.reserve(static_cast<std::size_t>(count));

  constexpr double kStep = std::numbers::pi / 4.0;
  double left = nu + 0.5;
  double f_left = bessel_j(nu, left);
  while (static_cast<int>(zeros.size()) < count) {
    const double right = left + kStep;
    const double f_right = bessel_j(nu, right);
    if (f_right == 0.0) {
      zeros.push_back(right);
    } else if (std::signbit(f_left) != std::signbit(f_right) && f_left != 0.0) {
      double lo = left;
      double hi = right;
      double f_lo = f_left;
      while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = bessel_j(nu, mid);
        if (f_mid == 0.0) {
          lo = hi = mid;
          break;
        }
        if (std::signbit(f_mid) == std::signbit(f_lo)) {
          lo = mid;
          f_lo = f_mid;
        } else {
          hi = mid;
        }
      }
      double root = 0.5 * (lo + hi);
      for (int iter = 0; iter < 50; ++iter) {
        const double value = bessel_j(nu, root);
        const double slope = bessel_j_derivative(nu, root);
        if (value == 0.0 || slope == 0.0) break;
        const double step = value / slope;
        const double next = root - step;
        if (!(next > lo - 1e-6 && next < hi + 1e-6)) break;
        root = next;
        if (std::fabs(step) <= 1e-13 * std::max(1.0, root)) break;
      }
      zeros.push_back(root);
    }
    left = right;
    f_left = f_right;
  }
  return zeros;
}

double bessel_j_zero(double nu, int n) {
  if (n < 1) throw std::invalid_argument("bessel_j_zero: n must be >= 1");
  return bessel_j_zeros(nu, n).back();
}

}  // namespace spiralbox::specfun

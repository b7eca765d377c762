#include "spiralbox/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace spiralbox::specfun {

namespace {

struct Panel {
  double a, b;
  double fa, fm, fb;
  double whole;  // Simpson estimate over [a, b]
};

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureSpec& spec) {
  if (!(a < b)) throw std::invalid_argument("integrate: requires a < b");
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0)) {
    throw std::invalid_argument("integrate: tolerances must be positive");
  }
  if (spec.max_subdivisions < 1) {
    throw std::invalid_argument("integrate: max_subdivisions must be >= 1");
  }

  auto eval = [&f](double x) {
    const double y = f(x);
    if (!std::isfinite(y)) {
      throw std::domain_error("integrate: integrand is not finite inside the interval");
    }
    return y;
  };

  constexpr int kInitialPanels = 16;
  const double width = (b - a) / kInitialPanels;
  std::vector<Panel> stack;
  stack.reserve(256);

  double fa = f(a);
  if (!std::isfinite(fa)) fa = 0.0;
  double magnitude = 0.0;
  for (int i = 0; i < kInitialPanels; ++i) {
    const double lo = a + i * width;
    const double hi = (i + 1 == kInitialPanels) ? b : a + (i + 1) * width;
    const double fm = eval(0.5 * (lo + hi));
    const double fb = eval(hi);
    const double s = simpson(lo, hi, fa, fm, fb);
    magnitude += std::fabs(s);
    stack.push_back({lo, hi, fa, fm, fb, s});
    fa = fb;
  }

  QuadratureResult result;
  result.converged = true;
  const double tol = std::max(spec.abs_tol, spec.rel_tol * magnitude);
  const double span = b - a;

  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (p.a + p.b);
    if (!(mid > p.a && mid < p.b && 0.5 * (p.a + mid) > p.a)) {
      // panel at the resolution limit of double
      result.converged = false;
      result.value += p.whole;
      continue;
    }
    const double f_left = eval(0.5 * (p.a + mid));
    const double f_right = eval(0.5 * (mid + p.b));
    const double left = simpson(p.a, mid, p.fa, f_left, p.fm);
    const double right = simpson(mid, p.b, p.fm, f_right, p.fb);
    const double delta = left + right - p.whole;
    const double local_tol = tol * (p.b - p.a) / span;
    const bool exhausted = result.subdivisions >= spec.max_subdivisions;
    if (std::fabs(delta) <= 15.0 * local_tol || exhausted) {
      if (std::fabs(delta) > 15.0 * local_tol) result.converged = false;
      result.value += left + right + delta / 15.0;
      result.error_estimate += std::fabs(delta) / 15.0;
      continue;
    }
    ++result.subdivisions;
    stack.push_back({mid, p.b, p.fm, f_right, p.fb, right});
    stack.push_back({p.a, mid, p.fa, f_left, p.fm, left});
  }
  return result;
}

}  // namespace spiralbox::specfun

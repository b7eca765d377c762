#include "spiralbox/specfun.hpp"

#include <stdexcept>

namespace spiralbox::specfun {

double laguerre(int degree, double alpha, double x) {
  if (degree < 0) {
    throw std::invalid_argument("laguerre: degree must be non-negative");
  }
  double previous = 1.0;
  if (degree == 0) return previous;
  double current = 1.0 + alpha - x;
  for (int k = 1; k < degree; ++k) {
    const double next =
        ((2.0 * k + 1.0 + alpha - x) * current - (k + alpha) * previous) /
        (k + 1.0);
    previous = current;
    current = next;
  }
  return current;
}

}  // namespace spiralbox::specfun

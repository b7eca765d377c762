#include <cmath>
#include <stdexcept>

#include "spiralbox/quantum.hpp"

namespace spiralbox::quantum {

double pib_open_energy(int n, double box_length, double mass) {
  if (n < 1) throw std::invalid_argument("pib_open_energy: n must be >= 1");
  if (!(box_length > 0.0) || !(mass > 0.0)) {
    throw std::invalid_argument("pib_open_energy: length and mass must be positive");
  }
  constexpr double h = units::UnitSystem::planck;
  return h * h * n * n / (8.0 * mass * box_length * box_length);
}

double pib_closed_energy(int n, double box_length, double mass) {
  return 4.0 * pib_open_energy(n, box_length, mass);
}

}  // namespace spiralbox::quantum

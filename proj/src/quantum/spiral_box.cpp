#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "spiralbox/quantum.hpp"
#include "spiralbox/specfun.hpp"

namespace spiralbox::quantum {

namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

double geometry_induced_potential(double k_value, double mass) {
  require_positive(mass, "geometry_induced_potential: mass");
  constexpr double hbar = units::UnitSystem::hbar;
  return -hbar * hbar * k_value * k_value / (8.0 * mass);
}

double omega_from_sigma(double sigma) {
  require_positive(sigma, "omega_from_sigma: sigma");
  return 0.5 * std::sqrt(std::fabs(1.0 - 1.0 / (sigma * sigma)));
}

double sigma_from_omega(double omega) {
  if (!(omega >= 0.0) || !std::isfinite(omega)) {
    throw std::invalid_argument("sigma_from_omega: omega must be >= 0");
  }
  return 1.0 / std::sqrt(1.0 + 4.0 * omega * omega);
}

SpiralBoxSpectrum::SpiralBoxSpectrum(double sigma, double omega,
                                     double box_length, double mass,
                                     std::vector<double> zeros)
    : sigma_(sigma),
      omega_(omega),
      box_length_(box_length),
      mass_(mass),
      zeros_(std::move(zeros)) {
  require_positive(box_length, "SpiralBoxSpectrum: box length");
  require_positive(mass, "SpiralBoxSpectrum: mass");
  constexpr double hbar = units::UnitSystem::hbar;
  const double scale = hbar * hbar / (2.0 * mass * box_length * box_length);
  energies_.reserve(zeros_.size());
  for (double j : zeros_) energies_.push_back(scale * j * j);
}

double SpiralBoxSpectrum::zero(int n) const {
  if (n < 1 || n > levels()) {
    throw std::out_of_range("SpiralBoxSpectrum: level " + std::to_string(n) +
                            " outside 1.." + std::to_string(levels()));
  }
  return zeros_[static_cast<std::size_t>(n - 1)];
}

double SpiralBoxSpectrum::energy(int n) const {
  zero(n);  // range check
  return energies_[static_cast<std::size_t>(n - 1)];
}

SpiralBoxSpectrum spiral_box_spectrum(double sigma, double box_length,
                                      double mass, int n_levels) {
  require_positive(sigma, "spiral_box_spectrum: sigma");
  if (n_levels < 0) {
    throw std::invalid_argument("spiral_box_spectrum: n_levels must be >= 0");
  }
  const double omega = omega_from_sigma(sigma);
  return SpiralBoxSpectrum(sigma, omega, box_length, mass,
                           specfun::bessel_j_zeros(omega, n_levels));
}

SpiralBoxSpectrum spiral_box_spectrum_for_order(double omega, double box_length,
                                                double mass, int n_levels) {
  if (n_levels < 0) {
    throw std::invalid_argument("spiral_box_spectrum: n_levels must be >= 0");
  }
  return SpiralBoxSpectrum(sigma_from_omega(omega), omega, box_length, mass,
                           specfun::bessel_j_zeros(omega, n_levels));
}

double normalization_constant(const SpiralBoxSpectrum& spectrum, int n) {
  const double j = spectrum.zero(n);
  const double omega = spectrum.omega();
  const double product =
      -specfun::bessel_j_lower(omega, j) * specfun::bessel_j(omega + 1.0, j);
  return std::sqrt(2.0) / (spectrum.box_length() * std::sqrt(product));
}

double spiral_box_wavefunction(const SpiralBoxSpectrum& spectrum, int n,
                               double s) {
  const double length = spectrum.box_length();
  if (!(s >= 0.0 && s <= length)) {
    throw std::domain_error("spiral_box_wavefunction: s outside [0, L]");
  }
  const double c1 = normalization_constant(spectrum, n);
  return c1 * std::sqrt(s) *
         specfun::bessel_j(spectrum.omega(), spectrum.zero(n) * s / length);
}

}  // namespace spiralbox::quantum

#pragma once

// Closed-form quantum mechanics on curves: the geometry-induced potential,
// the Bessel spectrum of the polyene (k = 1/(sigma s)) box, the particle in a
// box baselines and the one-dimensional hydrogen solution.
//
// Inputs and outputs are in Hartree atomic units: lengths in bohr, energies
// in Hartree, masses in electron masses.

#include <concepts>
#include <stdexcept>
#include <vector>

#include "spiralbox/units.hpp"

namespace spiralbox::quantum {

/// V = -hbar^2 k^2 / (8 m). Never positive.
double geometry_induced_potential(double k_value, double mass);

/// omega = 1/2 sqrt|1 - 1/sigma^2|.
///
/// The absolute value is kept as written so that the published table of
/// (sigma, omega) pairs is reproduced; for sigma < 1 the Bessel functions of
/// this order solve -psi'' + (omega^2 - 1/4)/s^2 psi = eps psi, which is the
/// repulsive inverse-square problem, not the attractive one the potential
/// -1/(4 sigma^2 s^2) would give.
double omega_from_sigma(double sigma);

/// The sigma <= 1 preimage of omega: 1 / sqrt(1 + 4 omega^2).
double sigma_from_omega(double omega);

/// Anything that hands out energies E_n for n = 1, 2, ...
template <class T>
concept EnergyLevels = requires(const T& levels, int n) {
  { levels.energy(n) } -> std::convertible_to<double>;
};

/// Dirichlet spectrum on [0, L] for the polyene curve:
/// E_n = hbar^2 j_{omega,n}^2 / (2 m L^2).
class SpiralBoxSpectrum {
 public:
  SpiralBoxSpectrum(double sigma, double omega, double box_length, double mass,
                    std::vector<double> zeros);

  double sigma() const { return sigma_; }
  double omega() const { return omega_; }
  double box_length() const { return box_length_; }
  double mass() const { return mass_; }
  int levels() const { return static_cast<int>(zeros_.size()); }
  const std::vector<double>& zeros() const { return zeros_; }
  const std::vector<double>& energies() const { return energies_; }

  /// 1-based. Throws std::out_of_range past levels().
  double zero(int n) const;
  double energy(int n) const;

 private:
  double sigma_;
  double omega_;
  double box_length_;
  double mass_;
  std::vector<double> zeros_;
  std::vector<double> energies_;
};

/// n_levels may be 0, giving an empty spectrum.
SpiralBoxSpectrum spiral_box_spectrum(double sigma, double box_length,
                                      double mass, int n_levels);

/// Same spectrum keyed directly by the Bessel order.
SpiralBoxSpectrum spiral_box_spectrum_for_order(double omega, double box_length,
                                                double mass, int n_levels);

/// c1 = sqrt(2) / (L sqrt(-J_{omega-1}(j) J_{omega+1}(j))), j = j_{omega,n}.
double normalization_constant(const SpiralBoxSpectrum& spectrum, int n);

/// psi_n(s) = c1 sqrt(s) J_omega(j_{omega,n} s / L) for s in [0, L].
double spiral_box_wavefunction(const SpiralBoxSpectrum& spectrum, int n,
                               double s);

/// h^2 n^2 / (8 m L^2), Dirichlet ends.
double pib_open_energy(int n, double box_length, double mass);
/// Periodic ends: exactly 4 * pib_open_energy.
double pib_closed_energy(int n, double box_length, double mass);

struct PibLevels {
  double box_length;
  double mass = 1.0;
  bool closed = false;

  double energy(int n) const {
    return closed ? pib_closed_energy(n, box_length, mass)
                  : pib_open_energy(n, box_length, mass);
  }
};

/// lambda = hc / (E_{n+1} - E_n) in nm, with n the HOMO index.
template <EnergyLevels Levels>
double transition_wavelength_nm(const Levels& levels, int n_homo) {
  if (n_homo < 1) {
    throw std::invalid_argument("transition_wavelength: HOMO index must be >= 1");
  }
  const double gap = levels.energy(n_homo + 1) - levels.energy(n_homo);
  if (!(gap > 0.0)) {
    throw std::domain_error("transition_wavelength: levels are degenerate");
  }
  return units::wavelength_nm(gap);
}

/// State of the one-dimensional hydrogen problem along the hydrogen curve.
struct HydrogenState1D {
  int n = 1;                   // principal quantum number N >= 1
  double a0 = 1.0;             // Bohr-like length hbar^2 / (m e^2)
  double normalization = 1.0;  // B
};

/// Builds the state for quantum number N and fixes B so that
/// the integral of psi^2 over [0, 50 N a0] is one.
HydrogenState1D make_hydrogen_state(int n, double a0 = 1.0);

/// psi(s) = B exp(-z/2) z L_{N-1}^(1)(z), z = 2 s / (N a0).
double hydrogen_wavefunction_1d(const HydrogenState1D& state, double s);

/// R_{N,l}(r) = B exp(-z/2) z^l L_{N-l-1}^(2l+1)(z), z = 2 r / (N a0), with
/// the closed-form B making the integral of r^2 R^2 equal to one.
double hydrogen_radial_3d(int n, int ell, double r, double a0 = 1.0);

}  // namespace spiralbox::quantum

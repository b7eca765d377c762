#pragma once

// Hartree atomic units (hbar = m_e = 1) are used everywhere inside the
// library; these constants convert at the input/output boundary only.
// Values are CODATA 2018.

#include <numbers>

namespace spiralbox::units {

struct UnitSystem {
  static constexpr double hbar = 1.0;
  static constexpr double mass_electron = 1.0;
  static constexpr double planck = 2.0 * std::numbers::pi;  // h in atomic units
  static constexpr double hc_ev_nm = 1239.841984;
  static constexpr double hartree_ev = 27.211386245988;
  static constexpr double bohr_nm = 0.0529177210903;
};

constexpr double nm_to_bohr(double nm) { return nm / UnitSystem::bohr_nm; }
constexpr double bohr_to_nm(double bohr) { return bohr * UnitSystem::bohr_nm; }
constexpr double hartree_to_ev(double e) { return e * UnitSystem::hartree_ev; }
constexpr double ev_to_hartree(double e) { return e / UnitSystem::hartree_ev; }

/// lambda = hc / dE, for dE in Hartree.
constexpr double wavelength_nm(double delta_e_hartree) {
  return UnitSystem::hc_ev_nm / hartree_to_ev(delta_e_hartree);
}

/// Photon energy in Hartree for a wavelength in nm.
constexpr double photon_energy_hartree(double lambda_nm) {
  return ev_to_hartree(UnitSystem::hc_ev_nm / lambda_nm);
}

}  // namespace spiralbox::units

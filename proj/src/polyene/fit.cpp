#include <cmath>
#include <stdexcept>
#include <string>

#include "spiralbox/io.hpp"
#include "spiralbox/polyene.hpp"
#include "spiralbox/quantum.hpp"
#include "spiralbox/units.hpp"

namespace spiralbox::polyene {

NoBracketError::NoBracketError(const std::string& name, double target,
                               double lambda_min, double lambda_max)
    : std::runtime_error("fit_sigma: lambda_exp = " + io::format_number(target) +
                         " nm for '" + name + "' is outside the attainable range [" +
                         io::format_number(lambda_min) + ", " +
                         io::format_number(lambda_max) + "] nm"),
      lambda_min_(lambda_min),
      lambda_max_(lambda_max) {}

double percent_error(double lambda_calc, double lambda_exp) {
  return 100.0 * std::fabs(lambda_calc - lambda_exp) / lambda_exp;
}

double lambda_model(double sigma, const Molecule& mol, double mass) {
  const int n = homo_index(mol);
  const auto spectrum = quantum::spiral_box_spectrum(
      sigma, units::nm_to_bohr(mol.box_length_nm), mass, n + 1);
  return quantum::transition_wavelength_nm(spectrum, n);
}

FitResult fit_sigma(const Molecule& mol, double mass, double tol_nm,
                    const FitOptions& options) {
  if (!mol.lambda_exp_nm) {
    throw std::invalid_argument("fit_sigma: molecule '" + mol.name + "' has no lambda_exp");
  }
  if (!(tol_nm > 0.0)) throw std::invalid_argument("fit_sigma: tolerance must be positive");
  if (options.grid_points < 2 || !(options.sigma_min > 0.0) ||
      !(options.sigma_min < options.sigma_max)) {
    throw std::invalid_argument("fit_sigma: bad scan grid");
  }
  const double target = *mol.lambda_exp_nm;
  const double log_min = std::log(options.sigma_min);
  const double log_max = std::log(options.sigma_max);
  auto residual = [&](double log_sigma) {
    return lambda_model(std::exp(log_sigma), mol, mass) - target;
  };

  double attainable_min = INFINITY;
  double attainable_max = -INFINITY;
  double lo = 0.0, hi = 0.0, f_lo = 0.0, f_hi = 0.0;
  bool bracketed = false;
  double prev_x = log_min;
  double prev_f = residual(prev_x);
  attainable_min = attainable_max = prev_f + target;
  for (int i = 1; i < options.grid_points; ++i) {
    const double x = log_min + (log_max - log_min) * i / (options.grid_points - 1);
    const double f = residual(x);
    attainable_min = std::min(attainable_min, f + target);
    attainable_max = std::max(attainable_max, f + target);
    if (!bracketed && (prev_f == 0.0 || std::signbit(prev_f) != std::signbit(f))) {
      lo = prev_x;
      hi = x;
      f_lo = prev_f;
      f_hi = f;
      bracketed = true;
    }
    prev_x = x;
    prev_f = f;
  }
  if (!bracketed) throw NoBracketError(mol.name, target, attainable_min, attainable_max);

  FitResult result;
  result.name = mol.name;
  result.lambda_exp_nm = target;
  double best_x = std::fabs(f_lo) <= std::fabs(f_hi) ? lo : hi;
  double best_f = std::fabs(f_lo) <= std::fabs(f_hi) ? f_lo : f_hi;
  while (std::fabs(best_f) > tol_nm && result.iterations < options.max_iterations) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = residual(mid);
    ++result.iterations;
    if (std::fabs(f_mid) < std::fabs(best_f)) {
      best_x = mid;
      best_f = f_mid;
    }
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }

  result.sigma = std::exp(best_x);
  result.omega = quantum::omega_from_sigma(result.sigma);
  result.lambda_calc_nm = best_f + target;
  result.percent_error = percent_error(result.lambda_calc_nm, target);
  result.converged = std::fabs(best_f) <= tol_nm;
  return result;
}

double fit_effective_mass(const Molecule& mol) {
  if (!mol.lambda_exp_nm) {
    throw std::invalid_argument("fit_effective_mass: molecule '" + mol.name +
                                "' has no lambda_exp");
  }
  const int n = homo_index(mol);
  const double length = units::nm_to_bohr(mol.box_length_nm);
  const double gap = units::photon_energy_hartree(*mol.lambda_exp_nm);
  constexpr double h = units::UnitSystem::planck;
  return h * h * (2.0 * n + 1.0) / (8.0 * length * length * gap);
}

}  // namespace spiralbox::polyene

#pragma once

// Linear polyenes as electrons in a polyene-curve box: molecule records,
// sigma fitting against absorption wavelengths, the effective-mass particle
// in a box, and calculated-vs-experimental reports.
//
// Molecule data is in nm (box length, wavelengths); the conversion to atomic
// units happens here.

#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spiralbox::polyene {

struct Molecule {
  std::string name;
  int n_pi = 2;
  double box_length_nm = 0.0;
  std::optional<double> lambda_exp_nm;
  std::string source;

  /// Throws std::invalid_argument unless n_pi is positive and even,
  /// the box length is positive, and lambda_exp (if present) is positive.
  void validate() const;
};

/// Conjugated-chain heuristic: (number of C-C bonds along the chain + 1)
/// times 0.139 nm, i.e. n_pi * 0.139 nm for a linear polyene. This is a
/// convenience default, not measured data.
double default_box_length_nm(int n_pi);

/// HOMO level n = n_pi / 2; the optical transition is n -> n + 1.
int homo_index(const Molecule& mol);

/// Transition wavelength (nm) of the polyene-curve box for this molecule.
double lambda_model(double sigma, const Molecule& mol, double mass = 1.0);

struct FitResult {
  std::string name;
  double sigma = 0.0;
  double omega = 0.0;
  double lambda_calc_nm = 0.0;
  std::optional<double> lambda_exp_nm;
  std::optional<double> percent_error;
  std::optional<double> effective_mass;
  int iterations = 0;
  bool converged = false;
};

/// 100 |calc - exp| / exp.
double percent_error(double lambda_calc, double lambda_exp);

struct FitOptions {
  double sigma_min = 1e-4;
  double sigma_max = 1e3;
  int grid_points = 400;
  int max_iterations = 200;
};

/// lambda_exp lies outside what the model reaches on the scan grid.
class NoBracketError : public std::runtime_error {
 public:
  NoBracketError(const std::string& name, double target, double lambda_min,
                 double lambda_max);
  double lambda_min() const { return lambda_min_; }
  double lambda_max() const { return lambda_max_; }

 private:
  double lambda_min_;
  double lambda_max_;
};

/// Finds sigma with |lambda_model(sigma) - lambda_exp| <= tol_nm.
///
/// lambda_model is scanned on a log grid over [sigma_min, sigma_max]; the
/// first sign change of lambda_model - lambda_exp in increasing sigma is
/// bisected in log sigma. Throws std::invalid_argument when lambda_exp is
/// missing and NoBracketError when no sign change exists.
FitResult fit_sigma(const Molecule& mol, double mass, double tol_nm,
                    const FitOptions& options = {});

/// Mass (in m_e) for which the open particle in a box of length L reproduces
/// lambda_exp: m = h^2 (2n + 1) / (8 L^2 dE), dE = hc / lambda_exp.
double fit_effective_mass(const Molecule& mol);

/// Evaluates each molecule at the matching sigma. Throws if the sizes differ.
std::vector<FitResult> report(std::span<const Molecule> mols,
                              std::span<const double> sigmas, double mass = 1.0);

/// Parses the molecule JSON format: an array of objects with fields
/// name, n_pi, box_length_nm, lambda_exp_nm (optional or null), source.
std::vector<Molecule> parse_molecules(std::string_view json_text);
std::vector<Molecule> load_molecules(const std::filesystem::path& path);

/// name,sigma,omega,lambda_calc_nm,lambda_exp_nm,percent_error
/// (plus effective_mass_me when requested). Missing values are left empty.
std::string report_csv(std::span<const FitResult> rows,
                       bool with_effective_mass = false);

/// Grouped bar chart of calculated vs experimental wavelengths.
std::string report_svg(std::span<const FitResult> rows);

}  // namespace spiralbox::polyene

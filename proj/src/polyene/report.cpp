#include <cmath>
#include <stdexcept>

#include "spiralbox/io.hpp"
#include "spiralbox/polyene.hpp"
#include "spiralbox/quantum.hpp"

namespace spiralbox::polyene {

namespace {

std::string optional_number(const std::optional<double>& value) {
  return value ? io::format_number(*value) : std::string();
}

}  // namespace

std::vector<FitResult> report(std::span<const Molecule> mols,
                              std::span<const double> sigmas, double mass) {
  if (mols.size() != sigmas.size()) {
    throw std::invalid_argument("report: need one sigma per molecule");
  }
  std::vector<FitResult> rows;
  rows.reserve(mols.size());
  for (std::size_t i = 0; i < mols.size(); ++i) {
    const auto& mol = mols[i];
    FitResult row;
    row.name = mol.name;
    row.sigma = sigmas[i];
    row.omega = quantum::omega_from_sigma(sigmas[i]);
    row.lambda_calc_nm = lambda_model(sigmas[i], mol, mass);
    row.lambda_exp_nm = mol.lambda_exp_nm;
    if (mol.lambda_exp_nm) {
      row.percent_error = percent_error(row.lambda_calc_nm, *mol.lambda_exp_nm);
      row.effective_mass = fit_effective_mass(mol);
    }
    row.converged = true;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string report_csv(std::span<const FitResult> rows, bool with_effective_mass) {
  std::string out = "name,sigma,omega,lambda_calc_nm,lambda_exp_nm,percent_error";
  if (with_effective_mass) out += ",effective_mass_me";
  out += '\n';
  for (const auto& r : rows) {
    out += io::csv_field(r.name) + ',' + io::format_number(r.sigma) + ',' + io::format_number(r.omega) +
           ',' + io::format_number(r.lambda_calc_nm) + ',' + optional_number(r.lambda_exp_nm) +
           ',' + optional_number(r.percent_error);
    if (with_effective_mass) out += ',' + optional_number(r.effective_mass);
    out += '\n';
  }
  return out;
}

std::string report_svg(std::span<const FitResult> rows) {
  std::vector<io::BarGroup> groups;
  groups.reserve(rows.size());
  for (const auto& r : rows) {
    groups.push_back({r.name, {r.lambda_calc_nm, r.lambda_exp_nm.value_or(NAN)}});
  }
  const std::vector<std::string> legend = {"calculated", "experimental"};
  io::PlotOptions options;
  options.title = "Transition wavelength: calculated vs experimental";
  options.y_label = "lambda / nm";
  options.width = 720;
  options.height = 420;
  return io::render_bar_chart(groups, legend, options);
}

}  // namespace spiralbox::polyene

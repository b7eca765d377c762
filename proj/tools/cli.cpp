#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spiralbox/fdsolver.hpp"
#include "spiralbox/geometry.hpp"
#include "spiralbox/io.hpp"
#include "spiralbox/polyene.hpp"
#include "spiralbox/quantum.hpp"
#include "spiralbox/specfun.hpp"
#include "spiralbox/units.hpp"

namespace spiralbox::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class WriteError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// sigma^2 of the four tabulated polyenes, shortest chain first
constexpr double kPublishedSigma2[] = {0.004, 0.0014, 0.0009, 0.00045};

using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
  std::string command;
  Json parameters = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

Json json_number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return io::round_significant(value);
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += io::csv_field(table.columns[i]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (const auto* d = std::get_if<double>(&row[i])) out += io::format_number(*d);
      if (const auto* s = std::get_if<std::string>(&row[i])) out += io::csv_field(*s);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json item = Json::array();
    for (const auto& cell : row) {
      if (const auto* d = std::get_if<double>(&cell)) {
        item.push_back(json_number(*d));
      } else if (const auto* s = std::get_if<std::string>(&cell)) {
        item.push_back(*s);
      } else {
        item.push_back(nullptr);
      }
    }
    rows.push_back(std::move(item));
  }
  Json doc;
  doc["command"] = table.command;
  doc["parameters"] = table.parameters;
  doc["columns"] = table.columns;
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    out.flush();
    if (!out) throw WriteError("could not write to standard output");
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw WriteError("cannot open '" + path + "' for writing");
  file << text;
  file.close();
  if (!file) throw WriteError("failed while writing '" + path + "'");
}

// Options shared by every subcommand.
struct OutputOptions {
  std::string path = "-";
  std::string format = "csv";
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("-o,--output", o.path, "Output file, '-' for standard output")
      ->capture_default_str();
  cmd->add_option("-f,--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "svg"}))
      ->capture_default_str();
}

void write_table(const Table& table, const OutputOptions& o, std::ostream& out,
                 const std::function<std::string()>& svg) {
  if (o.format == "csv") {
    emit(o.path, to_csv(table), out);
  } else if (o.format == "json") {
    emit(o.path, to_json(table), out);
  } else {
    emit(o.path, svg(), out);
  }
}

// --sigma / --omega pair used by the spectrum-like commands.
struct OrderOptions {
  std::optional<double> sigma;
  std::optional<double> omega;

  void add(CLI::App* cmd) {
    auto* s = cmd->add_option("--sigma", sigma, "Curve parameter sigma (> 0)")
                  ->check(CLI::PositiveNumber);
    auto* w = cmd->add_option("--omega", omega, "Bessel order directly (>= 0)")
                  ->check(CLI::NonNegativeNumber);
    s->excludes(w);
  }

  // (sigma, omega); sigma falls back to the sigma <= 1 preimage of omega
  std::pair<double, double> resolve() const {
    if (sigma) return {*sigma, quantum::omega_from_sigma(*sigma)};
    if (omega) return {quantum::sigma_from_omega(*omega), *omega};
    throw UsageError("one of --sigma or --omega is required");
  }
};

struct LengthOptions {
  double bohr = 1.0;
  std::optional<double> nm;

  void add(CLI::App* cmd) {
    auto* b = cmd->add_option("--length", bohr, "Box length in bohr")
                  ->check(CLI::PositiveNumber)
                  ->capture_default_str();
    auto* n = cmd->add_option("--length-nm", nm, "Box length in nm")->check(CLI::PositiveNumber);
    b->excludes(n);
  }

  double resolve() const { return nm ? units::nm_to_bohr(*nm) : bohr; }
};

// ---------------------------------------------------------------- curve

struct CurveOptions {
  OutputOptions output;
  std::vector<double> sigmas;
  double p = 1.0;
  double s_min = 1e-3;
  double s_max = 1.0;
  double s0 = 1.0;
  int samples = 2000;
  std::string spacing = "auto";
};

int cmd_curve(const CurveOptions& o, std::ostream& out) {
  if (!(o.s_min < o.s_max)) throw UsageError("--s-min must be below --s-max");
  if (o.s_min < 0.0) throw UsageError("--s-min must not be negative");
  const bool closed = o.p == 0.5 || o.p == 1.0;
  if (o.s_min == 0.0 && o.p > 0.0) {
    throw UsageError("--s-min must be > 0 when the curvature diverges at s = 0 (p > 0)");
  }
  geometry::Spacing spacing = geometry::Spacing::uniform;
  if (o.spacing == "log" || (o.spacing == "auto" && closed)) {
    if (!closed) throw UsageError("log spacing needs a closed form (p = 0.5 or p = 1)");
    spacing = geometry::Spacing::logarithmic;
  }

  Table table;
  table.command = "curve";
  table.parameters = {{"p", o.p}, {"s_min", o.s_min}, {"s_max", o.s_max},
                      {"s0", o.s0}, {"samples", o.samples}};
  table.parameters["sigma"] = o.sigmas;
  const bool several = o.sigmas.size() > 1;
  table.columns = several ? std::vector<std::string>{"sigma", "s", "x", "y"}
                          : std::vector<std::string>{"s", "x", "y"};

  std::vector<io::Series> series;
  for (double sigma : o.sigmas) {
    geometry::PlaneCurveSamples samples;
    if (o.p == 0.5) {
      samples = geometry::sample_curve(
          [&](double s) { return geometry::hydrogen_curve(sigma, s, o.s0); }, o.s_min, o.s_max,
          o.samples, spacing);
    } else if (o.p == 1.0) {
      samples = geometry::sample_curve(
          [&](double s) { return geometry::polyene_curve(sigma, s, o.s0); }, o.s_min, o.s_max,
          o.samples, spacing);
    } else {
      const geometry::CurvatureLaw law(sigma, o.p);
      geometry::FrenetState start;
      start.s = o.s_min;
      samples = geometry::frenet_integrate([&](double s) { return law.curvature(s); }, start,
                                           o.s_max, o.samples - 1);
    }
    for (std::size_t i = 0; i < samples.points.size(); ++i) {
      std::vector<Cell> row;
      if (several) row.emplace_back(sigma);
      row.emplace_back(samples.s_values[i]);
      row.emplace_back(samples.points[i].x);
      row.emplace_back(samples.points[i].y);
      table.rows.push_back(std::move(row));
    }
    series.push_back({"sigma = " + io::format_number(sigma), samples.points});
  }

  write_table(table, o.output, out, [&] {
    io::PlotOptions plot;
    plot.title = "k(s) = 1/(sigma s^p), p = " + io::format_number(o.p);
    plot.x_label = "x";
    plot.y_label = "y";
    plot.equal_aspect = true;
    return io::render_line_plot(series, plot);
  });
  return kOk;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumOptions {
  OutputOptions output;
  OrderOptions order;
  LengthOptions length;
  double mass = 1.0;
  int levels = 5;
};

int cmd_spectrum(const SpectrumOptions& o, std::ostream& out) {
  const auto [sigma, omega] = o.order.resolve();
  const double length = o.length.resolve();
  const auto spectrum = quantum::spiral_box_spectrum_for_order(omega, length, o.mass, o.levels);

  Table table;
  table.command = "spectrum";
  table.parameters = {{"sigma", json_number(sigma)}, {"omega", json_number(omega)},
                      {"length_bohr", json_number(length)}, {"mass", o.mass},
                      {"levels", o.levels}};
  table.columns = {"n", "sigma", "omega", "j", "energy_hartree", "energy_ev"};
  io::Series series{"E_n", {}};
  for (int n = 1; n <= spectrum.levels(); ++n) {
    const double e = spectrum.energy(n);
    table.rows.push_back({static_cast<double>(n), sigma, omega, spectrum.zero(n), e,
                          units::hartree_to_ev(e)});
    series.points.push_back({static_cast<double>(n), units::hartree_to_ev(e)});
  }
  write_table(table, o.output, out, [&] {
    io::PlotOptions plot;
    plot.title = "Spectrum, omega = " + io::format_number(omega);
    plot.x_label = "n";
    plot.y_label = "E / eV";
    return io::render_line_plot(std::vector<io::Series>{series}, plot);
  });
  return kOk;
}

// ---------------------------------------------------------------- wavefunction

struct WavefunctionOptions {
  OutputOptions output;
  OrderOptions order;
  LengthOptions length;
  std::vector<int> levels = {1, 2, 3};
  int samples = 1001;
};

int cmd_wavefunction(const WavefunctionOptions& o, std::ostream& out) {
  const auto [sigma, omega] = o.order.resolve();
  const double length = o.length.resolve();
  int top = 0;
  for (int n : o.levels) top = std::max(top, n);
  const auto spectrum = quantum::spiral_box_spectrum_for_order(omega, length, 1.0, top);

  Table table;
  table.command = "wavefunction";
  table.parameters = {{"sigma", json_number(sigma)}, {"omega", json_number(omega)},
                      {"length_bohr", json_number(length)}, {"samples", o.samples}};
  table.parameters["levels"] = o.levels;
  table.columns = {"s"};
  std::vector<io::Series> series;
  for (int n : o.levels) {
    table.columns.push_back("psi_" + std::to_string(n));
    series.push_back({"n = " + std::to_string(n), {}});
  }
  for (int i = 0; i < o.samples; ++i) {
    const double s = i + 1 == o.samples ? length : length * i / (o.samples - 1);
    std::vector<Cell> row{s};
    for (std::size_t k = 0; k < o.levels.size(); ++k) {
      const double psi = quantum::spiral_box_wavefunction(spectrum, o.levels[k], s);
      row.emplace_back(psi);
      series[k].points.push_back({s, psi});
    }
    table.rows.push_back(std::move(row));
  }
  write_table(table, o.output, out, [&] {
    io::PlotOptions plot;
    plot.title = "Wavefunctions, omega = " + io::format_number(omega);
    plot.x_label = "s / bohr";
    plot.y_label = "psi";
    return io::render_line_plot(series, plot);
  });
  return kOk;
}

// ---------------------------------------------------------------- oracle

struct OracleOptions {
  OutputOptions output;
  OrderOptions order;
  LengthOptions length;
  int levels = 3;
  int grid = 20000;
  std::string mode = "effective";
  bool no_richardson = false;
};

int cmd_oracle(const OracleOptions& o, std::ostream& out, std::ostream& err) {
  const auto [sigma, omega] = o.order.resolve();
  const double length = o.length.resolve();
  if (o.levels > o.grid / 8) throw UsageError("--levels must be small compared to --grid");

  Table table;
  table.command = "oracle";
  table.parameters = {{"mode", o.mode},           {"sigma", json_number(sigma)},
                      {"omega", json_number(omega)}, {"length_bohr", json_number(length)},
                      {"levels", o.levels},       {"grid", o.grid}};
  std::vector<io::Series> series;
  io::PlotOptions plot;

  if (o.mode == "effective") {
    const auto potential = fd::inverse_square_potential(omega);
    const int coarse_n = o.no_richardson ? o.grid : o.grid / 2;
    const auto coarse =
        fd::eigenvalues_lowest(fd::discretize(potential, length, coarse_n), o.levels,
                               fd::Execution::parallel);
    std::vector<double> fine;
    std::vector<double> refined;
    if (!o.no_richardson) {
      fine = fd::eigenvalues_lowest(fd::discretize(potential, length, 2 * coarse_n), o.levels,
                                    fd::Execution::parallel);
      refined = fd::richardson_refine(potential, length, o.levels, coarse_n,
                                      fd::Execution::parallel);
      table.columns = {"n", "analytic", "fd_coarse", "fd_fine", "fd_refined", "relative_error"};
    } else {
      table.columns = {"n", "analytic", "fd", "relative_error"};
    }
    const auto zeros = specfun::bessel_j_zeros(omega, o.levels);
    io::Series analytic{"(j/L)^2", {}};
    io::Series numeric{o.no_richardson ? "finite difference" : "finite difference, refined", {}};
    for (int k = 0; k < o.levels; ++k) {
      const double exact = std::pow(zeros[static_cast<std::size_t>(k)] / length, 2);
      const double best = o.no_richardson ? coarse[k] : refined[k];
      std::vector<Cell> row{static_cast<double>(k + 1), exact, coarse[k]};
      if (!o.no_richardson) {
        row.emplace_back(fine[k]);
        row.emplace_back(refined[k]);
      }
      row.emplace_back(std::fabs(best - exact) / exact);
      table.rows.push_back(std::move(row));
      analytic.points.push_back({k + 1.0, exact});
      numeric.points.push_back({k + 1.0, best});
    }
    series = {analytic, numeric};
    plot.title = "Inverse-square oracle, omega = " + io::format_number(omega);
    plot.x_label = "n";
    plot.y_label = "eigenvalue";
  } else {
    // literal attractive potential; ground state checked on a refinement ladder
    const auto potential = fd::literal_polyene_potential(sigma);
    if (sigma < 1.0) {
      err << "warning: -1/(4 sigma^2 s^2) with sigma < 1 is supercritical; the lowest "
             "eigenvalues fall without bound as the grid is refined\n";
    }
    table.columns = {"n_interior", "h"};
    for (int k = 1; k <= o.levels; ++k) table.columns.push_back("eps_" + std::to_string(k));
    io::Series ground{"eps_1", {}};
    for (int divisor : {8, 4, 2, 1}) {
      const int n = o.grid / divisor;
      const auto op = fd::discretize(potential, length, n);
      const auto eps = fd::eigenvalues_lowest(op, o.levels, fd::Execution::parallel);
      std::vector<Cell> row{static_cast<double>(n), op.grid_step};
      for (double e : eps) row.emplace_back(e);
      table.rows.push_back(std::move(row));
      ground.points.push_back({std::log10(static_cast<double>(n)), eps[0]});
    }
    series = {ground};
    plot.title = "Literal potential, sigma = " + io::format_number(sigma);
    plot.x_label = "log10 n_interior";
    plot.y_label = "lowest eigenvalue";
  }
  write_table(table, o.output, out, [&] { return io::render_line_plot(series, plot); });
  return kOk;
}

// ---------------------------------------------------------------- fit / report

Json fit_rows_json(const std::string& command, const std::vector<polyene::FitResult>& rows) {
  Json list = Json::array();
  for (const auto& r : rows) {
    Json item;
    item["name"] = r.name;
    item["sigma"] = json_number(r.sigma);
    item["omega"] = json_number(r.omega);
    item["lambda_calc_nm"] = json_number(r.lambda_calc_nm);
    item["lambda_exp_nm"] = r.lambda_exp_nm ? json_number(*r.lambda_exp_nm) : Json(nullptr);
    item["percent_error"] = r.percent_error ? json_number(*r.percent_error) : Json(nullptr);
    if (r.effective_mass) item["effective_mass_me"] = json_number(*r.effective_mass);
    item["iterations"] = r.iterations;
    item["converged"] = r.converged;
    list.push_back(std::move(item));
  }
  Json doc;
  doc["command"] = command;
  doc["rows"] = std::move(list);
  return doc;
}

void write_fit_rows(const std::string& command, const std::vector<polyene::FitResult>& rows,
                    bool with_mass, const OutputOptions& o, std::ostream& out) {
  if (o.format == "csv") {
    emit(o.path, polyene::report_csv(rows, with_mass), out);
  } else if (o.format == "json") {
    emit(o.path, fit_rows_json(command, rows).dump(2) + "\n", out);
  } else {
    emit(o.path, polyene::report_svg(rows), out);
  }
}

std::vector<polyene::Molecule> read_molecules(const std::string& path) {
  try {
    return polyene::load_molecules(path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

struct FitOptions {
  OutputOptions output;
  std::string input;
  double mass = 1.0;
  double tol_nm = 1e-6;
  bool effective_mass = false;
};

int cmd_fit(const FitOptions& o, std::ostream& out, std::ostream& err) {
  const auto mols = read_molecules(o.input);
  std::vector<polyene::FitResult> rows;
  int status = kOk;
  for (const auto& mol : mols) {
    if (!mol.lambda_exp_nm) {
      err << "warning: '" << mol.name << "' has no lambda_exp_nm; skipped\n";
      continue;
    }
    try {
      auto fit = polyene::fit_sigma(mol, o.mass, o.tol_nm);
      if (o.effective_mass) fit.effective_mass = polyene::fit_effective_mass(mol);
      if (!fit.converged) {
        err << "error: fit for '" << mol.name << "' stopped at |residual| = "
            << io::format_number(std::fabs(fit.lambda_calc_nm - *mol.lambda_exp_nm))
            << " nm\n";
        status = kFitFailure;
      }
      rows.push_back(std::move(fit));
    } catch (const polyene::NoBracketError& e) {
      err << "error: " << e.what() << "\n";
      status = kFitFailure;
    }
  }
  write_fit_rows("fit", rows, o.effective_mass, o.output, out);
  return status;
}

struct ReportOptions {
  OutputOptions output;
  std::string input;
  std::vector<double> sigmas;
  bool published_sigma = false;
  double mass = 1.0;
  bool effective_mass = false;
};

int cmd_report(const ReportOptions& o, std::ostream& out) {
  const auto mols = read_molecules(o.input);
  std::vector<double> sigmas = o.sigmas;
  if (o.published_sigma) {
    if (mols.size() != std::size(kPublishedSigma2)) {
      throw UsageError("--published-sigma needs exactly four molecules in chain order");
    }
    sigmas.clear();
    for (double s2 : kPublishedSigma2) sigmas.push_back(std::sqrt(s2));
  }
  if (sigmas.size() != mols.size()) {
    throw UsageError("need one --sigma per molecule (" + std::to_string(mols.size()) +
                     " molecules, " + std::to_string(sigmas.size()) + " sigma values)");
  }
  auto rows = polyene::report(mols, sigmas, o.mass);
  if (!o.effective_mass) {
    for (auto& r : rows) r.effective_mass.reset();
  }
  write_fit_rows("report", rows, o.effective_mass, o.output, out);
  return kOk;
}

// ---------------------------------------------------------------- hydrogen

struct HydrogenOptions {
  OutputOptions output;
  int n = 1;
  double a0 = 1.0;
  int samples = 1000;
  std::optional<double> s_max;
};

int cmd_hydrogen(const HydrogenOptions& o, std::ostream& out) {
  const auto state = quantum::make_hydrogen_state(o.n, o.a0);
  const double s_max = o.s_max.value_or(20.0 * o.n * o.a0);

  Table table;
  table.command = "hydrogen";
  table.parameters = {{"n", o.n}, {"a0", o.a0}, {"samples", o.samples},
                      {"s_max", json_number(s_max)}};
  table.columns = {"s", "psi", "psi_squared", "r2_R2"};
  io::Series d1{"|psi_1D|^2", {}};
  io::Series d3{"r^2 R^2", {}};
  for (int i = 1; i <= o.samples; ++i) {
    const double s = s_max * i / o.samples;
    const double psi = quantum::hydrogen_wavefunction_1d(state, s);
    const double radial = quantum::hydrogen_radial_3d(o.n, 0, s, o.a0);
    const double density3 = s * s * radial * radial;
    table.rows.push_back({s, psi, psi * psi, density3});
    d1.points.push_back({s, psi * psi});
    d3.points.push_back({s, density3});
  }
  write_table(table, o.output, out, [&] {
    io::PlotOptions plot;
    plot.title = "Hydrogen densities, N = " + std::to_string(o.n);
    plot.x_label = "s / a0";
    plot.y_label = "density";
    return io::render_line_plot(std::vector<io::Series>{d1, d3}, plot);
  });
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spiral curves, their Bessel spectra and the polyene transition model"};
  app.name("spiralbox");
  app.require_subcommand(1);

  CurveOptions curve;
  auto* c = app.add_subcommand("curve", "Sample a power-law-curvature curve");
  add_output_options(c, curve.output);
  c->add_option("--sigma", curve.sigmas, "sigma value(s); several give a gallery")
      ->required()
      ->check(CLI::PositiveNumber);
  c->add_option("--p", curve.p, "Curvature exponent p")->capture_default_str();
  c->add_option("--s-min", curve.s_min, "First arc length")->capture_default_str();
  c->add_option("--s-max", curve.s_max, "Last arc length")->capture_default_str();
  c->add_option("--s0", curve.s0, "Base point of the closed forms")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  c->add_option("--samples", curve.samples, "Number of samples")
      ->check(CLI::Range(2, 10000000))
      ->capture_default_str();
  c->add_option("--spacing", curve.spacing, "auto, log or uniform")
      ->check(CLI::IsMember({"auto", "log", "uniform"}))
      ->capture_default_str();

  SpectrumOptions spectrum;
  auto* sp = app.add_subcommand("spectrum", "Bessel-zero energy levels of the polyene box");
  add_output_options(sp, spectrum.output);
  spectrum.order.add(sp);
  spectrum.length.add(sp);
  sp->add_option("--mass", spectrum.mass, "Particle mass in m_e")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sp->add_option("--levels", spectrum.levels, "Number of levels")
      ->check(CLI::Range(0, 100000))
      ->capture_default_str();

  WavefunctionOptions wave;
  auto* wf = app.add_subcommand("wavefunction", "Normalized eigenfunctions on [0, L]");
  add_output_options(wf, wave.output);
  wave.order.add(wf);
  wave.length.add(wf);
  wf->add_option("-n,--levels", wave.levels, "Level indices")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  wf->add_option("--samples", wave.samples, "Number of samples")
      ->check(CLI::Range(2, 10000000))
      ->capture_default_str();

  OracleOptions oracle;
  auto* orc = app.add_subcommand("oracle", "Finite-difference check of the Bessel spectrum");
  add_output_options(orc, oracle.output);
  oracle.order.add(orc);
  oracle.length.add(orc);
  orc->add_option("--levels", oracle.levels, "Number of eigenvalues")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();
  orc->add_option("--grid", oracle.grid, "Interior grid points of the finest grid")
      ->check(CLI::Range(16, 10000000))
      ->capture_default_str();
  orc->add_option("--mode", oracle.mode, "effective or literal")
      ->check(CLI::IsMember({"effective", "literal"}))
      ->capture_default_str();
  orc->add_flag("--no-richardson", oracle.no_richardson, "Report the plain finest grid only");

  FitOptions fit;
  auto* ft = app.add_subcommand("fit", "Fit sigma to each molecule's lambda_exp");
  add_output_options(ft, fit.output);
  ft->add_option("-i,--input", fit.input, "Molecule JSON file")->required();
  ft->add_option("--mass", fit.mass, "Particle mass in m_e")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  ft->add_option("--tol", fit.tol_nm, "Wavelength tolerance in nm")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  ft->add_flag("--effective-mass", fit.effective_mass, "Add the box effective-mass column");

  ReportOptions report;
  auto* rp = app.add_subcommand("report", "Calculated vs experimental wavelengths at given sigma");
  add_output_options(rp, report.output);
  rp->add_option("-i,--input", report.input, "Molecule JSON file")->required();
  auto* rs = rp->add_option("--sigma", report.sigmas, "One sigma per molecule, in file order")
                 ->check(CLI::PositiveNumber);
  rp->add_flag("--published-sigma", report.published_sigma,
               "Use the tabulated sigma of the four polyenes")
      ->excludes(rs);
  rp->add_option("--mass", report.mass, "Particle mass in m_e")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  rp->add_flag("--effective-mass", report.effective_mass, "Add the box effective-mass column");

  HydrogenOptions hydrogen;
  auto* hy = app.add_subcommand("hydrogen", "One-dimensional hydrogen state vs radial density");
  add_output_options(hy, hydrogen.output);
  hy->add_option("-n,--n", hydrogen.n, "Principal quantum number N")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();
  hy->add_option("--a0", hydrogen.a0, "Length scale a0")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  hy->add_option("--samples", hydrogen.samples, "Number of samples")
      ->check(CLI::Range(1, 10000000))
      ->capture_default_str();
  hy->add_option("--s-max", hydrogen.s_max, "Last arc length (default 20 N a0)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (c->parsed()) return cmd_curve(curve, out);
    if (sp->parsed()) return cmd_spectrum(spectrum, out);
    if (wf->parsed()) return cmd_wavefunction(wave, out);
    if (orc->parsed()) return cmd_oracle(oracle, out, err);
    if (ft->parsed()) return cmd_fit(fit, out, err);
    if (rp->parsed()) return cmd_report(report, out);
    if (hy->parsed()) return cmd_hydrogen(hydrogen, out);
  } catch (const WriteError& e) {
    err << "error: " << e.what() << "\n";
    return kWriteFailure;
  } catch (const std::exception& e) {
    // bad flag values surface here as invalid_argument / domain_error
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace spiralbox::cli

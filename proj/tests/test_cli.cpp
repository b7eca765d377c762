#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using doctest::Approx;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "spiralbox");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = spiralbox::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Parses CSV with numeric cells only, skipping the header.
std::vector<std::vector<double>> numeric_rows(const std::string& csv) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

std::string header(const std::string& csv) { return csv.substr(0, csv.find('\n')); }

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / "spiralbox_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = scratch_dir() / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"spectrum", "--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"dance"}).code == 2);
  CHECK(run({"spectrum", "--sigma", "0.5", "--bogus"}).code == 2);
  CHECK(run({"spectrum", "--sigma", "-0.5"}).code == 2);
  CHECK(run({"spectrum"}).code == 2);
  CHECK(run({"spectrum", "--sigma", "0.5", "--omega", "2"}).code == 2);
  CHECK(run({"spectrum", "--sigma", "0.5", "-f", "xml"}).code == 2);
  CHECK(run({"curve", "--sigma", "0.5", "--s-min", "2", "--s-max", "1"}).code == 2);
  CHECK(run({"curve", "--sigma", "0.5", "--s-min", "0"}).code == 2);
  CHECK(run({"fit", "-i", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"hydrogen", "-n", "0"}).code == 2);
}

TEST_CASE("write failure exits with 3") {
  const auto r = run({"spectrum", "--sigma", "0.5", "-o", "/nonexistent/dir/out.csv"});
  CHECK(r.code == 3);
  CHECK(r.err.find("cannot open") != std::string::npos);
}

TEST_CASE("spectrum output") {
  const auto empty = run({"spectrum", "--sigma", "0.5", "--levels", "0"});
  CHECK(empty.code == 0);
  CHECK(empty.out == "n,sigma,omega,j,energy_hartree,energy_ev\n");

  const double omegas[] = {7.88987, 13.35370, 16.65920, 23.56490};
  const double sigma2[] = {0.004, 0.0014, 0.0009, 0.00045};
  for (int i = 0; i < 4; ++i) {
    const auto r = run({"spectrum", "--sigma", std::to_string(std::sqrt(sigma2[i])), "--levels", "2"});
    REQUIRE(r.code == 0);
    const auto rows = numeric_rows(r.out);
    CHECK(rows[0][2] == Approx(omegas[i]).epsilon(5e-5));
  }

  const auto big = run({"spectrum", "--sigma", "1e6", "--length", "2", "--levels", "4"});
  for (const auto& row : numeric_rows(big.out)) {
    const double n = row[0];
    const double pib = n * n * std::numbers::pi * std::numbers::pi / 8.0;
    CHECK(row[4] == Approx(pib).epsilon(1e-6));
  }
}

TEST_CASE("curve output") {
  // hydrogen curve radius law from the CSV columns
  const double sigma = 0.8;
  const auto h = run({"curve", "--sigma", "0.8", "--p", "0.5", "--s-min", "0.01", "--s-max",
                      "10", "--samples", "200"});
  REQUIRE(h.code == 0);
  CHECK(header(h.out) == "s,x,y");
  for (const auto& row : numeric_rows(h.out)) {
    const double r = std::hypot(row[1], row[2]);
    CHECK(r == Approx(sigma * std::sqrt(row[0] + sigma * sigma / 4)).epsilon(1e-8));
  }

  // p = 0 is a circle of radius sigma and may start at s = 0
  const auto c = run({"curve", "--sigma", "1", "--p", "0", "--s-min", "0", "--s-max",
                      "6.283185307179586", "--samples", "400"});
  REQUIRE(c.code == 0);
  const auto rows = numeric_rows(c.out);
  for (const auto& row : rows) CHECK(std::hypot(row[1], row[2] - 1.0) == Approx(1.0).epsilon(1e-8));
  CHECK(std::hypot(rows.back()[1], rows.back()[2]) <= 1e-6);
}

TEST_CASE("curve gallery: smaller sigma winds tighter") {
  const std::vector<std::string> sigmas = {"0.0632455532", "0.0374165739", "0.03", "0.0212132034"};
  double previous_turns = 0.0;
  for (const auto& s : sigmas) {
    const auto r = run({"curve", "--sigma", s, "--samples", "20000"});
    REQUIRE(r.code == 0);
    double turns = 0.0;
    const auto rows = numeric_rows(r.out);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      double d = std::atan2(rows[i][2], rows[i][1]) - std::atan2(rows[i - 1][2], rows[i - 1][1]);
      d = std::remainder(d, 2 * std::numbers::pi);
      turns += d / (2 * std::numbers::pi);
    }
    CHECK(turns > previous_turns);
    previous_turns = turns;
  }

  const auto svg = run({"curve", "--sigma", sigmas[0], "--sigma", sigmas[1], "--sigma", sigmas[2],
                        "--sigma", sigmas[3], "-f", "svg"});
  REQUIRE(svg.code == 0);
  std::size_t polylines = 0;
  for (auto pos = svg.out.find("<polyline"); pos != std::string::npos;
       pos = svg.out.find("<polyline", pos + 1)) {
    ++polylines;
  }
  CHECK(polylines == 4);

  const auto csv = run({"curve", "--sigma", "0.1", "--sigma", "0.2", "--samples", "3"});
  CHECK(header(csv.out) == "sigma,s,x,y");
  CHECK(numeric_rows(csv.out).size() == 6);
}

TEST_CASE("wavefunction output vanishes at both ends") {
  const auto r = run({"wavefunction", "--omega", "7.88987", "-n", "1", "-n", "4", "--samples", "101"});
  REQUIRE(r.code == 0);
  CHECK(header(r.out) == "s,psi_1,psi_4");
  const auto rows = numeric_rows(r.out);
  CHECK(rows.front()[1] == 0.0);
  CHECK(std::fabs(rows.back()[1]) <= 1e-9);
  CHECK(std::fabs(rows.back()[2]) <= 1e-9);
}

TEST_CASE("oracle effective mode") {
  const auto r = run({"oracle", "--omega", "7.88987", "--levels", "5"});
  REQUIRE(r.code == 0);
  for (const auto& row : numeric_rows(r.out)) CHECK(row.back() < 1e-3);

  const auto half = run({"oracle", "--omega", "0.5", "--length", "2", "--no-richardson",
                         "--grid", "4000"});
  REQUIRE(half.code == 0);
  CHECK(header(half.out) == "n,analytic,fd,relative_error");
  for (const auto& row : numeric_rows(half.out)) {
    const double exact = std::pow(row[0] * std::numbers::pi / 2, 2);
    CHECK(row[1] == Approx(exact).epsilon(1e-9));
    CHECK(row[2] == Approx(exact).epsilon(1e-5));
  }
}

TEST_CASE("oracle literal mode shows the ground state falling") {
  const auto r = run({"oracle", "--sigma", "0.0632455532", "--mode", "literal", "--grid", "4000"});
  REQUIRE(r.code == 0);
  CHECK(r.err.find("supercritical") != std::string::npos);
  const auto rows = numeric_rows(r.out);
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i][0] > rows[i - 1][0]);
    CHECK(rows[i][2] < rows[i - 1][2]);
  }
}

TEST_CASE("fit on the round-trip fixture") {
  const auto r = run({"fit", "-i", SPIRALBOX_TEST_DATA "/polyenes_roundtrip.json", "--tol", "1e-9",
                      "--effective-mass"});
  REQUIRE(r.code == 0);
  CHECK(header(r.out) ==
        "name,sigma,omega,lambda_calc_nm,lambda_exp_nm,percent_error,effective_mass_me");
  const double sigma2[] = {0.004, 0.0014, 0.0009, 0.00045};
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  for (double s2 : sigma2) {
    std::getline(in, line);
    const auto rows = numeric_rows("h\n" + line.substr(line.find(',') + 1));
    CHECK(rows[0][0] == Approx(std::sqrt(s2)).epsilon(1e-6));
    CHECK(rows[0][4] <= 1e-6);
    CHECK(rows[0][5] > 0.0);
  }

  const auto json = run({"fit", "-i", SPIRALBOX_TEST_DATA "/polyenes_roundtrip.json", "-f", "json"});
  REQUIRE(json.code == 0);
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc.at("rows").size() == 4);
  CHECK(doc.at("rows")[0].at("converged").get<bool>());
}

TEST_CASE("fit skips molecules without lambda_exp") {
  const auto r = run({"fit", "-i", SPIRALBOX_REPO_DATA "/polyenes.json"});
  CHECK(r.code == 0);
  CHECK(r.out == "name,sigma,omega,lambda_calc_nm,lambda_exp_nm,percent_error\n");
  CHECK(r.err.find("skipped") != std::string::npos);
}

TEST_CASE("fit without a bracket exits with 4") {
  const auto path = write_temp("unreachable.json", R"([
    {"name": "far", "n_pi": 8, "box_length_nm": 1.112, "lambda_exp_nm": 1e6, "source": "t"},
    {"name": "near", "n_pi": 8, "box_length_nm": 1.112, "lambda_exp_nm": 250, "source": "t"}])");
  const auto r = run({"fit", "-i", path});
  CHECK(r.code == 4);
  CHECK(r.err.find("attainable range") != std::string::npos);
  // the fittable molecule is still reported
  CHECK(r.out.find("near,") != std::string::npos);
  CHECK(r.out.find("far,") == std::string::npos);
}

TEST_CASE("report") {
  const auto empty = write_temp("empty.json", "[]");
  const auto r = run({"report", "-i", empty});
  CHECK(r.code == 0);
  CHECK(r.out == "name,sigma,omega,lambda_calc_nm,lambda_exp_nm,percent_error\n");

  const auto published = run({"report", "-i", SPIRALBOX_TEST_DATA "/polyenes_roundtrip.json",
                              "--published-sigma", "--effective-mass"});
  REQUIRE(published.code == 0);
  std::istringstream in(published.out);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    const auto rows = numeric_rows("h\n" + line.substr(line.find(',') + 1));
    CHECK(rows[0][4] <= 1e-6);  // fixture wavelengths are the model's own
  }

  CHECK(run({"report", "-i", empty, "--sigma", "0.1"}).code == 2);
  CHECK(run({"report", "-i", SPIRALBOX_TEST_DATA "/polyenes_roundtrip.json", "--sigma", "0.1"})
            .code == 2);
  const auto svg = run({"report", "-i", SPIRALBOX_TEST_DATA "/polyenes_roundtrip.json",
                        "--published-sigma", "-f", "svg"});
  CHECK(svg.code == 0);
  CHECK(svg.out.rfind("<svg", 0) == 0);
}

TEST_CASE("hydrogen output") {
  for (int n : {1, 2, 3, 4}) {
    const auto r = run({"hydrogen", "-n", std::to_string(n), "--samples", "2000"});
    REQUIRE(r.code == 0);
    CHECK(header(r.out) == "s,psi,psi_squared,r2_R2");
    int nodes = 0;
    const auto rows = numeric_rows(r.out);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if ((rows[i][1] < 0) != (rows[i - 1][1] < 0)) ++nodes;
      CHECK(rows[i][2] == Approx(rows[i][3]).epsilon(1e-8));
    }
    CHECK(nodes == n - 1);
  }
}

TEST_CASE("output is deterministic and lands in the requested file") {
  const auto dir = scratch_dir();
  for (const std::string format : {"csv", "json", "svg"}) {
    const auto a = dir / ("a." + format);
    const auto b = dir / ("b." + format);
    const std::vector<std::string> base = {"curve", "--sigma", "0.2", "--sigma", "0.05",
                                           "--samples", "7000", "-f", format};
    auto args_a = base;
    args_a.insert(args_a.end(), {"-o", a.string()});
    auto args_b = base;
    args_b.insert(args_b.end(), {"-o", b.string()});
    REQUIRE(run(args_a).code == 0);
    REQUIRE(run(args_b).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK_FALSE(slurp(a).empty());
  }
  const auto json = nlohmann::json::parse(slurp(dir / "a.json"));
  CHECK(json.at("columns").size() == 4);
  CHECK(json.at("rows").size() == 14000);
}

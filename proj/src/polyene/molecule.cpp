#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "spiralbox/polyene.hpp"

namespace spiralbox::polyene {

namespace {

constexpr double kConjugatedBondNm = 0.139;

Molecule molecule_from_json(const nlohmann::json& record, std::size_t index) {
  const std::string where = "molecule record " + std::to_string(index);
  if (!record.is_object()) throw std::invalid_argument(where + ": not an object");
  for (const char* key : {"name", "n_pi", "box_length_nm", "source"}) {
    if (!record.contains(key)) {
      throw std::invalid_argument(where + ": missing field '" + key + "'");
    }
  }
  for (auto it = record.begin(); it != record.end(); ++it) {
    const auto& key = it.key();
    if (key != "name" && key != "n_pi" && key != "box_length_nm" &&
        key != "lambda_exp_nm" && key != "source") {
      throw std::invalid_argument(where + ": unknown field '" + key + "'");
    }
  }
  Molecule mol;
  try {
    mol.name = record.at("name").get<std::string>();
    mol.n_pi = record.at("n_pi").get<int>();
    mol.box_length_nm = record.at("box_length_nm").get<double>();
    mol.source = record.at("source").get<std::string>();
    if (record.contains("lambda_exp_nm") && !record.at("lambda_exp_nm").is_null()) {
      mol.lambda_exp_nm = record.at("lambda_exp_nm").get<double>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(where + ": " + e.what());
  }
  mol.validate();
  return mol;
}

}  // namespace

void Molecule::validate() const {
  if (n_pi < 2 || n_pi % 2 != 0) {
    throw std::invalid_argument("molecule '" + name + "': n_pi must be a positive even integer");
  }
  if (!(box_length_nm > 0.0) || !std::isfinite(box_length_nm)) {
    throw std::invalid_argument("molecule '" + name + "': box length must be positive");
  }
  if (lambda_exp_nm && (!(*lambda_exp_nm > 0.0) || !std::isfinite(*lambda_exp_nm))) {
    throw std::invalid_argument("molecule '" + name + "': lambda_exp must be positive");
  }
}

double default_box_length_nm(int n_pi) {
  if (n_pi < 2) throw std::invalid_argument("default_box_length_nm: n_pi must be >= 2");
  const int bonds = n_pi - 1;
  return (bonds + 1) * kConjugatedBondNm;
}

int homo_index(const Molecule& mol) {
  mol.validate();
  return mol.n_pi / 2;
}

std::vector<Molecule> parse_molecules(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("molecule file: ") + e.what());
  }
  if (doc.is_object() && doc.contains("molecules")) doc = doc.at("molecules");
  if (!doc.is_array()) {
    throw std::invalid_argument("molecule file: expected an array of molecule records");
  }
  std::vector<Molecule> out;
  out.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) out.push_back(molecule_from_json(doc[i], i));
  return out;
}

std::vector<Molecule> load_molecules(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open molecule file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_molecules(text.str());
}

}  // namespace spiralbox::polyene

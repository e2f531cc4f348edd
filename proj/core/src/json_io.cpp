#include "superlsa/json_io.hpp"

#include <fstream>

namespace superlsa {

namespace {

[[noreturn]] void reject(const std::string& what) { throw SchemaError(what); }

}  // namespace

SuperAlgebra algebra_from_json(const nlohmann::json& j) {
  if (!j.is_object()) reject("top level must be an object");
  for (const char* key : {"dim", "parity", "names", "constants"})
    if (!j.contains(key)) reject(std::string("missing required key \"") + key + "\"");

  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() <= 0)
    reject("\"dim\" must be a positive integer");
  int dim = j["dim"].get<int>();

  if (!j["parity"].is_array() || static_cast<int>(j["parity"].size()) != dim)
    reject("\"parity\" must be an array of length dim");
  std::vector<int> parity;
  for (std::size_t i = 0; i < j["parity"].size(); ++i) {
    const auto& p = j["parity"][i];
    if (!p.is_number_integer() || (p.get<int>() != 0 && p.get<int>() != 1))
      reject("parity[" + std::to_string(i) + "] must be 0 or 1");
    parity.push_back(p.get<int>());
  }

  if (!j["names"].is_array() || static_cast<int>(j["names"].size()) != dim)
    reject("\"names\" must be an array of length dim");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < j["names"].size(); ++i) {
    if (!j["names"][i].is_string())
      reject("names[" + std::to_string(i) + "] must be a string");
    names.push_back(j["names"][i].get<std::string>());
  }

  SuperAlgebra A(std::move(parity), std::move(names));

  if (!j["constants"].is_array()) reject("\"constants\" must be an array");
  for (std::size_t e = 0; e < j["constants"].size(); ++e) {
    const auto& entry = j["constants"][e];
    std::string where = "constants[" + std::to_string(e) + "]";
    if (!entry.is_array() || entry.size() != 4) reject(where + " must be [i, j, k, \"coeff\"]");
    for (int t = 0; t < 3; ++t)
      if (!entry[t].is_number_integer()) reject(where + " indices must be integers");
    int i = entry[0].get<int>(), jj = entry[1].get<int>(), k = entry[2].get<int>();
    if (i < 0 || i >= dim || jj < 0 || jj >= dim || k < 0 || k >= dim)
      reject(where + " index out of range for dim " + std::to_string(dim));
    if (!entry[3].is_string()) reject(where + " coefficient must be a string");
    RatFun c;
    try {
      c = parse_scalar(entry[3].get<std::string>());
    } catch (const std::invalid_argument& ex) {
      reject(where + ": " + ex.what());
    }
    if ((A.parity(i) + A.parity(jj)) % 2 != A.parity(k))
      reject(where + " [" + std::to_string(i) + "," + std::to_string(jj) + "," +
             std::to_string(k) + "] violates the grading");
    A.add_constant(i, jj, k, c);
  }
  return A;
}

nlohmann::json algebra_to_json(const SuperAlgebra& A) {
  nlohmann::json j;
  j["dim"] = A.dim();
  j["parity"] = A.parities();
  j["names"] = A.names();
  nlohmann::json constants = nlohmann::json::array();
  for (const auto& [ij, terms] : A.constants())
    for (const auto& [k, c] : terms)
      constants.push_back({ij.first, ij.second, k, scalar_to_string(c)});
  j["constants"] = std::move(constants);
  return j;
}

SuperAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw SchemaError(path + ": " + ex.what());
  }
  return algebra_from_json(j);
}

void save_algebra(const SuperAlgebra& A, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot open " + path + " for writing");
  out << algebra_to_json(A).dump(2) << "\n";
}

}  // namespace superlsa

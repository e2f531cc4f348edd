#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "superlsa/superalgebra.hpp"

namespace superlsa {

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// schema: { "dim": n, "parity": [0|1,...], "names": [...],
//           "constants": [[i, j, k, "coeff"], ...] } with 0-based indices
SuperAlgebra algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const SuperAlgebra& A);

SuperAlgebra load_algebra(const std::string& path);
void save_algebra(const SuperAlgebra& A, const std::string& path);

}  // namespace superlsa

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qdm/states.hpp"

namespace qdm {

/// JSON state schema: {"dims": [dim_a, dim_b], "matrix": [[re, im], ...]},
/// matrix row-major with dim^2 entries. Parsing enforces every DensityMatrix
/// invariant; errors name the violated invariant.
DensityMatrix state_from_json(const nlohmann::json& j);
nlohmann::json state_to_json(const DensityMatrix& rho);

DensityMatrix load_state(const std::string& path);
void save_state(const DensityMatrix& rho, const std::string& path);

}  // namespace qdm

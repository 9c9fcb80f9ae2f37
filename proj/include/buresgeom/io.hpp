#pragma once

#include <filesystem>
#include <json.hpp>

#include "buresgeom/states.hpp"

namespace buresgeom {

/// State file schema: {"n": int, "beta": 1|2, "re": [[...]], "im": [[...]]},
/// row-major full matrices; "im" omitted when beta = 1.
nlohmann::json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const nlohmann::json& j);

DensityMatrix load_density(const std::filesystem::path& path);
void save_density(const DensityMatrix& rho, const std::filesystem::path& path);

} // namespace buresgeom

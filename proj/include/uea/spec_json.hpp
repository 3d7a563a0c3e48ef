#pragma once

#include <string>

#include <json.hpp>

#include "uea/lie_algebra.hpp"

namespace uea {

// {"name": str, "dim": int,
//  "brackets": [{"i": int, "j": int, "value": [{"coeff": "p/q", "gen": int}]}]}
//
// Structural JSON errors throw; index and Jacobi problems are left for validate().
LieAlgebraSpec spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const LieAlgebraSpec& spec);

LieAlgebraSpec load_spec(const std::string& path);

}  // namespace uea

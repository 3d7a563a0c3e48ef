#pragma once

#include <cstddef>

#include <json.hpp>

#include "uea/polynomial.hpp"

namespace uea {

// [{"coeff": "p/q", "mono": [e1, ..., en]}, ...] in ascending graded-lex order.
nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j, std::size_t dim);

nlohmann::json monomial_to_json(const Monomial& m);
Monomial monomial_from_json(const nlohmann::json& j, std::size_t dim);

}  // namespace uea

#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "uea/lie_algebra.hpp"

namespace uea {

// Nilpotent algebras of dimension <= 5 with a closed-form product.
enum class AlgebraId { n3_1, n4_1, n5_1, n5_2, n5_3, n5_4, n5_5, n5_6 };

inline constexpr std::array<AlgebraId, 8> kCatalog = {
    AlgebraId::n3_1, AlgebraId::n4_1, AlgebraId::n5_1, AlgebraId::n5_2,
    AlgebraId::n5_3, AlgebraId::n5_4, AlgebraId::n5_5, AlgebraId::n5_6};

std::string_view to_string(AlgebraId id);
std::optional<AlgebraId> parse_algebra_id(std::string_view name);
int dimension(AlgebraId id);

LieAlgebraSpec builtin(AlgebraId id);

// Catalog names plus "abelian_k" for 1 <= k <= 8. Throws NotFound otherwise.
LieAlgebraSpec builtin(std::string_view name);

}  // namespace uea

#include "uea/catalog.hpp"

#include <charconv>
#include <string>

#include "uea/error.hpp"

namespace uea {

namespace {

// [x_i, x_j] = -x_k, the only shape the catalog needs.
BracketEntry neg(int i, int j, int k) { return {i, j, {{k, Rational(-1)}}}; }

}  // namespace

std::string_view to_string(AlgebraId id) {
  switch (id) {
    case AlgebraId::n3_1: return "n3_1";
    case AlgebraId::n4_1: return "n4_1";
    case AlgebraId::n5_1: return "n5_1";
    case AlgebraId::n5_2: return "n5_2";
    case AlgebraId::n5_3: return "n5_3";
    case AlgebraId::n5_4: return "n5_4";
    case AlgebraId::n5_5: return "n5_5";
    case AlgebraId::n5_6: return "n5_6";
  }
  return "?";
}

std::optional<AlgebraId> parse_algebra_id(std::string_view name) {
  for (AlgebraId id : kCatalog) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

int dimension(AlgebraId id) {
  switch (id) {
    case AlgebraId::n3_1: return 3;
    case AlgebraId::n4_1: return 4;
    default: return 5;
  }
}

LieAlgebraSpec builtin(AlgebraId id) {
  std::vector<BracketEntry> b;
  switch (id) {
    case AlgebraId::n3_1:
      b = {neg(3, 2, 1)};
      break;
    case AlgebraId::n4_1:
      b = {neg(4, 2, 1), neg(4, 3, 2)};
      break;
    case AlgebraId::n5_1:
      b = {neg(5, 3, 1), neg(5, 4, 2)};
      break;
    case AlgebraId::n5_2:
      b = {neg(4, 3, 2), neg(5, 3, 1), neg(5, 4, 3)};
      break;
    case AlgebraId::n5_3:
      b = {neg(4, 2, 1), neg(5, 3, 1)};
      break;
    case AlgebraId::n5_4:
      b = {neg(4, 3, 1), neg(5, 2, 1), neg(5, 4, 2)};
      break;
    case AlgebraId::n5_5:
      b = {neg(5, 2, 1), neg(5, 3, 2), neg(5, 4, 3)};
      break;
    case AlgebraId::n5_6:
      b = {neg(4, 3, 1), neg(5, 2, 1), neg(5, 3, 2), neg(5, 4, 3)};
      break;
  }
  return LieAlgebraSpec(std::string(to_string(id)), dimension(id), std::move(b));
}

LieAlgebraSpec builtin(std::string_view name) {
  if (auto id = parse_algebra_id(name)) return builtin(*id);
  constexpr std::string_view prefix = "abelian_";
  if (name.starts_with(prefix)) {
    const std::string_view digits = name.substr(prefix.size());
    int k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && k >= 1 && k <= 8) {
      return LieAlgebraSpec(std::string(name), k, {});
    }
  }
  throw NotFound("unknown algebra '" + std::string(name) + "'");
}

}  // namespace uea

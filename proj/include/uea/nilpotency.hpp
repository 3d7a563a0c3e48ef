#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "uea/lie_algebra.hpp"

namespace uea {

struct NilpotencyProfile {
  // dim L1, dim L2, ... ending at the first 0 or at the first repeated dimension.
  std::vector<std::size_t> series_dims;
  bool nilpotent = false;
  // Index of the first zero term minus one; absent when not nilpotent.
  std::optional<std::size_t> nilpotency_class;
};

// Echelon basis of span(vectors), computed by fraction-free integer elimination.
std::vector<LieElement> span_basis(const std::vector<LieElement>& vectors, std::size_t dim);

// L1 = L, Lk = [L, L(k-1)].
NilpotencyProfile lower_central_series(const LieAlgebraSpec& spec);

// Least k >= 1 with ad(x_i)^k = 0 for each generator. Throws NotNilpotent when
// k would exceed dim(spec).
std::map<GeneratorIndex, int> engel_check(const LieAlgebraSpec& spec);

}  // namespace uea

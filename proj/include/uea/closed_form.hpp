#pragma once

#include <map>

#include "uea/catalog.hpp"
#include "uea/lemmas.hpp"
#include "uea/polynomial.hpp"

namespace uea {

// mL * mR in U(id) from the algebra's closed-form structure-constant formula.
// Builds configured with UEA_VERIFY_COMPOSITION also recompute the product via
// product_by_composition and throw EngineMismatch on disagreement.
Polynomial product(AlgebraId id, const Monomial& left, const Monomial& right);

// Bilinear extension of product().
Polynomial product(AlgebraId id, const Polynomial& left, const Polynomial& right);

// Lemma applications made by product_by_composition, by lemma.
using CompositionTrace = std::map<LemmaKind, std::size_t>;

// Straightens mL * mR blockwise: adjacent powers x_i^t x_j^u with i > j are
// rewritten by whichever straightening lemma the pair satisfies, instantiated
// through apply_roles. Works for any spec in which every non-commuting pair
// matches one of the lemmas; throws HypothesisMismatch otherwise.
Polynomial product_by_composition(const LieAlgebraSpec& spec, const Monomial& left,
                                  const Monomial& right, CompositionTrace* trace = nullptr);

// product() followed by the composition cross-check, regardless of build flags.
Polynomial product_checked(AlgebraId id, const Monomial& left, const Monomial& right);

}  // namespace uea

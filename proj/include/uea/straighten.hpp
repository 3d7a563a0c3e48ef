#pragma once

#include <utility>
#include <vector>

#include "uea/lie_algebra.hpp"
#include "uea/polynomial.hpp"

namespace uea {

// Product of generators in written order; empty is the unit. Letters are
// 1-based generator indices.
using Word = std::vector<int>;

// Which out-of-order adjacent pair is rewritten first. The normal form does
// not depend on the choice; both are kept so that can be checked.
enum class RewriteStrategy { leftmost, rightmost };

// PBW normal form of a word, using only the bracket table:
//   ... x_i x_j ... = ... x_j x_i ... + sum_k c_ij^k ... x_k ...   (i > j)
Polynomial straighten_word(const LieAlgebraSpec& spec, const Word& word,
                           RewriteStrategy strategy = RewriteStrategy::leftmost);

// Linear combination of words, straightened together so shared words merge.
Polynomial straighten_words(const LieAlgebraSpec& spec,
                            const std::vector<std::pair<Word, Rational>>& combination,
                            RewriteStrategy strategy = RewriteStrategy::leftmost);

// x1^e1 ... xn^en as a word.
Word to_word(const Monomial& m);

// Structure constants of mL * mR, by straightening the concatenated word.
Polynomial oracle_product(const LieAlgebraSpec& spec, const Monomial& left, const Monomial& right);

// Bilinear extension of oracle_product.
Polynomial oracle_product(const LieAlgebraSpec& spec, const Polynomial& left,
                          const Polynomial& right);

}  // namespace uea

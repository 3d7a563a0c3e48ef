#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uea/lie_algebra.hpp"
#include "uea/polynomial.hpp"
#include "uea/straighten.hpp"

namespace uea {

struct ExprFactor {
  int gen = 1;
  unsigned exp = 1;
  friend bool operator==(const ExprFactor&, const ExprFactor&) = default;
};

// coeff * factors[0] * factors[1] * ..., multiplied in written order.
struct ExprTerm {
  Rational coeff{1};
  std::vector<ExprFactor> factors;
  friend bool operator==(const ExprTerm&, const ExprTerm&) = default;
};

struct ExprAst {
  std::vector<ExprTerm> terms;
  friend bool operator==(const ExprAst&, const ExprAst&) = default;
};

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := rational ['*'] factor* | factor+
// factor := 'x' INT ['^' INT]
// rational := INT ['/' INT]
// Factors may be separated by '*' or whitespace. Throws ParseError with the
// byte offset of the problem, or RangeError for generators outside 1..dim.
ExprAst parse_expr(std::string_view text, int dim);

// Canonical spelling; parse_expr(to_string(ast), dim) == ast.
std::string to_string(const ExprAst& ast);

// Words longer than this are rejected by to_words.
inline constexpr std::size_t kMaxWordLength = 4096;

std::vector<std::pair<Word, Rational>> to_words(const ExprAst& ast);

// PBW normal form of the expression, straightened by the rewriting oracle.
Polynomial to_polynomial(const LieAlgebraSpec& spec, const ExprAst& ast);

}  // namespace uea

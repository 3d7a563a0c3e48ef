#pragma once

// Naive PBW straightening for tests. Bracket tables are typed in here rather
// than taken from the library catalog, and the rewriting recursion shares no
// code with the library engine.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "uea/polynomial.hpp"

namespace ref {

using Word = std::vector<int>;
using Exps = std::vector<unsigned>;
using Result = std::map<Exps, mpq_class>;

struct Algebra {
  std::string name;
  int dim;
  // (i, j), i > j  ->  [(gen, coeff)]
  std::map<std::pair<int, int>, std::vector<std::pair<int, long>>> brackets;
};

const std::vector<Algebra>& catalog();
const Algebra& algebra(const std::string& name);

// Always rewrites the rightmost inversion, memoized on whole words.
Result straighten(const Algebra& alg, const Word& word);
Result product(const Algebra& alg, const Exps& left, const Exps& right);

Result from_polynomial(const uea::Polynomial& p);
std::string to_string(const Result& r);

}  // namespace ref

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "uea/polynomial.hpp"
#include "uea/rational.hpp"

namespace uea {

// 1-based index of a basis element x_i. Range is checked against a spec at use.
struct GeneratorIndex {
  int value = 1;

  friend auto operator<=>(const GeneratorIndex&, const GeneratorIndex&) = default;
};

// Element of L in coordinates over the basis x1..xn.
class LieElement {
 public:
  explicit LieElement(std::size_t dim = 0) : coords_(dim) {}
  static LieElement generator(std::size_t dim, int gen, const Rational& coeff = 1);

  std::size_t dim() const noexcept { return coords_.size(); }
  // Coefficient of x_{i+1}.
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const;

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  LieElement operator-() const;
  friend LieElement operator*(const Rational& c, const LieElement& v);
  friend bool operator==(const LieElement&, const LieElement&) = default;

  // Degree-1 polynomial with the same coefficients.
  Polynomial to_polynomial() const;
  std::string to_string() const { return to_polynomial().to_string(); }

 private:
  std::vector<Rational> coords_;
};

struct BracketTerm {
  int gen = 0;
  Rational coeff;

  friend bool operator==(const BracketTerm&, const BracketTerm&) = default;
};

// Stored value of [x_i, x_j]; well-formed tables only hold i > j.
struct BracketEntry {
  int i = 0;
  int j = 0;
  std::vector<BracketTerm> value;

  friend bool operator==(const BracketEntry&, const BracketEntry&) = default;
};

// A Lie algebra given by its bracket table on an ordered basis. Immutable once
// built. Construction never rejects a table; validate() reports problems.
class LieAlgebraSpec {
 public:
  LieAlgebraSpec(std::string name, int dim, std::vector<BracketEntry> entries);

  const std::string& name() const noexcept { return name_; }
  int dim() const noexcept { return dim_; }
  const std::vector<BracketEntry>& entries() const noexcept { return entries_; }

  // Positive dimension, every key i > j in range, no duplicate keys, every
  // generator named in a value in range.
  bool well_formed() const noexcept { return shape_errors_.empty(); }
  const std::vector<std::string>& shape_errors() const noexcept { return shape_errors_; }

  // Terms of [x_i, x_j] for 1 <= i, j <= dim with skew-symmetry applied.
  // Only meaningful on well-formed specs; no range checking.
  const std::vector<BracketTerm>& bracket_terms(int i, int j) const {
    return table_[static_cast<std::size_t>((i - 1) * dim_ + (j - 1))];
  }

 private:
  std::string name_;
  int dim_;
  std::vector<BracketEntry> entries_;
  std::vector<std::string> shape_errors_;
  std::vector<std::vector<BracketTerm>> table_;
};

// [x_i, x_j] as a degree-1 polynomial. Throws RangeError for bad indices.
Polynomial bracket(const LieAlgebraSpec& spec, GeneratorIndex i, GeneratorIndex j);

// Bilinear extension of the bracket.
LieElement bracket(const LieAlgebraSpec& spec, const LieElement& u, const LieElement& v);

struct JacobiViolation {
  std::array<int, 3> triple{};
  Polynomial residual;
};

struct ValidationReport {
  bool ok = true;
  std::vector<JacobiViolation> jacobi;
  std::vector<std::string> shape;

  std::string to_string() const;
};

// Checks the Jacobi identity on every basis triple i < j < k. Never throws for
// malformed tables; problems are listed in the report instead.
ValidationReport validate(const LieAlgebraSpec& spec);

}  // namespace uea

#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "uea/monomial.hpp"
#include "uea/rational.hpp"

namespace uea {

// Sparse element of U(L) in the PBW basis. No zero coefficient is ever stored,
// so two polynomials are equal exactly when their term maps are equal.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Polynomial(std::size_t dim = 0) : dim_(dim) {}

  static Polynomial from_monomial(const Monomial& m, const Rational& coeff = 1);
  static Polynomial constant(std::size_t dim, const Rational& value);
  // Terms must be strictly ascending; zero coefficients are dropped.
  static Polynomial from_sorted_terms(std::size_t dim,
                                      std::vector<std::pair<Monomial, Rational>> terms);

  std::size_t dim() const noexcept { return dim_; }
  // Ascending graded-lex order.
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& coeff);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  // Highest-degree terms first: "x4*x5^2 - 2*x3*x5 + x2".
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.to_string();
  }

 private:
  std::size_t dim_;
  TermMap terms_;
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_scale(const Rational& c, const Polynomial& p);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return poly_add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  Polynomial r = p;
  return r -= q;
}
inline Polynomial operator-(const Polynomial& p) { return poly_scale(-1, p); }

}  // namespace uea

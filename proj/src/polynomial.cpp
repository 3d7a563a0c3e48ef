#include "uea/polynomial.hpp"

#include "uea/error.hpp"

namespace uea {

Polynomial Polynomial::from_monomial(const Monomial& m, const Rational& coeff) {
  Polynomial p(m.dim());
  p.add_term(m, coeff);
  return p;
}

Polynomial Polynomial::constant(std::size_t dim, const Rational& value) {
  return from_monomial(Monomial::unit(dim), value);
}

Polynomial Polynomial::from_sorted_terms(std::size_t dim,
                                         std::vector<std::pair<Monomial, Rational>> terms) {
  Polynomial p(dim);
  for (auto& [m, c] : terms) {
    if (m.dim() != dim) throw DimensionMismatch("monomial dimension does not match polynomial");
    if (!p.terms_.empty() && !(p.terms_.rbegin()->first < m)) {
      throw OrderingError("from_sorted_terms: terms not strictly ascending");
    }
    if (!c.is_zero()) p.terms_.emplace_hint(p.terms_.end(), std::move(m), std::move(c));
  }
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& coeff) {
  if (m.dim() != dim_) {
    throw DimensionMismatch("monomial of dimension " + std::to_string(m.dim()) +
                            " added to polynomial of dimension " + std::to_string(dim_));
  }
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.dim_ != dim_) throw DimensionMismatch("polynomials of different dimension");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.dim_ != dim_) throw DimensionMismatch("polynomials of different dimension");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = negative ? -c : c;
    if (m.is_unit()) {
      out += magnitude.to_string();
    } else if (magnitude.is_one()) {
      out += m.to_string();
    } else {
      out += magnitude.to_string() + '*' + m.to_string();
    }
  }
  return out;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) {
  Polynomial r = p;
  return r += q;
}

Polynomial poly_scale(const Rational& c, const Polynomial& p) {
  Polynomial r(p.dim());
  if (c.is_zero()) return r;
  for (const auto& [m, v] : p.terms()) r.add_term(m, c * v);
  return r;
}

}  // namespace uea

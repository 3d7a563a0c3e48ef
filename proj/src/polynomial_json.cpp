#include "uea/polynomial_json.hpp"

#include <string>

#include "uea/error.hpp"

namespace uea {

nlohmann::json monomial_to_json(const Monomial& m) {
  return nlohmann::json(m.exponents());
}

Monomial monomial_from_json(const nlohmann::json& j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) {
    throw DimensionMismatch("expected exponent vector of length " + std::to_string(dim));
  }
  std::vector<Monomial::Exponent> exps;
  exps.reserve(dim);
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<long long>() < 0) {
      throw Error("exponents must be nonnegative integers");
    }
    exps.push_back(e.get<Monomial::Exponent>());
  }
  return Monomial(std::move(exps));
}

nlohmann::json polynomial_to_json(const Polynomial& p) {
  auto out = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    out.push_back({{"coeff", c.to_string()}, {"mono", monomial_to_json(m)}});
  }
  return out;
}

Polynomial polynomial_from_json(const nlohmann::json& j, std::size_t dim) {
  if (!j.is_array()) throw Error("polynomial must be a JSON array");
  Polynomial p(dim);
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("mono") ||
        !term["coeff"].is_string()) {
      throw Error("polynomial term needs string 'coeff' and array 'mono'");
    }
    p.add_term(monomial_from_json(term["mono"], dim),
               Rational::parse(term["coeff"].get<std::string>()));
  }
  return p;
}

}  // namespace uea

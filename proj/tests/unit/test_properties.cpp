#include <doctest.h>

#include <random>

#include "uea/closed_form.hpp"
#include "uea/straighten.hpp"

using namespace uea;

namespace {

struct Gen {
  std::mt19937 rng;

  explicit Gen(unsigned seed) : rng(seed) {}

  AlgebraId algebra() {
    return kCatalog[std::uniform_int_distribution<std::size_t>(0, kCatalog.size() - 1)(rng)];
  }

  Monomial monomial(std::size_t dim, unsigned max_degree) {
    const auto basis = monomials_up_to_degree(dim, max_degree);
    return basis[std::uniform_int_distribution<std::size_t>(0, basis.size() - 1)(rng)];
  }

  Polynomial polynomial(std::size_t dim, unsigned max_degree) {
    Polynomial p(dim);
    const int terms = std::uniform_int_distribution<int>(1, 3)(rng);
    std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
    for (int i = 0; i < terms; ++i) p.add_term(monomial(dim, max_degree), Rational(num(rng), den(rng)));
    return p;
  }
};

constexpr int kCases = 240;

}  // namespace

TEST_CASE("associativity") {
  Gen g(1);
  for (int i = 0; i < kCases; ++i) {
    const AlgebraId id = g.algebra();
    const auto dim = static_cast<std::size_t>(dimension(id));
    const Polynomial a = g.polynomial(dim, 3), b = g.polynomial(dim, 3), c = g.polynomial(dim, 3);
    INFO(to_string(id) << ": (" << a << ")(" << b << ")(" << c << ")");
    CHECK(product(id, product(id, a, b), c) == product(id, a, product(id, b, c)));
  }
}

TEST_CASE("unit laws") {
  Gen g(2);
  for (int i = 0; i < kCases; ++i) {
    const AlgebraId id = g.algebra();
    const auto dim = static_cast<std::size_t>(dimension(id));
    const Polynomial one = Polynomial::constant(dim, 1);
    const Polynomial p = g.polynomial(dim, 4);
    CHECK(product(id, one, p) == p);
    CHECK(product(id, p, one) == p);
  }
}

TEST_CASE("degree-1 commutator equals the bracket") {
  Gen g(3);
  for (int i = 0; i < kCases; ++i) {
    const AlgebraId id = g.algebra();
    const auto spec = builtin(id);
    std::uniform_int_distribution<int> pick(1, spec.dim());
    const int a = pick(g.rng), b = pick(g.rng);
    const auto dim = static_cast<std::size_t>(spec.dim());
    const Monomial xa = Monomial::generator(dim, static_cast<std::size_t>(a));
    const Monomial xb = Monomial::generator(dim, static_cast<std::size_t>(b));
    CHECK(product(id, xa, xb) - product(id, xb, xa) == bracket(spec, GeneratorIndex{a}, GeneratorIndex{b}));
  }
}

TEST_CASE("PBW filtration") {
  Gen g(4);
  for (int i = 0; i < kCases; ++i) {
    const AlgebraId id = g.algebra();
    const auto dim = static_cast<std::size_t>(dimension(id));
    const Monomial l = g.monomial(dim, 4), r = g.monomial(dim, 4);
    const Polynomial p = product(id, l, r);
    const Monomial top = exponent_sum(l, r);
    INFO(to_string(id) << ' ' << l.to_string() << " * " << r.to_string());
    CHECK(p.coefficient(top) == Rational(1));
    // The sum of exponents is the unique term of top degree.
    for (const auto& [m, c] : p.terms()) {
      CHECK(total_degree(m) <= total_degree(top));
      if (m != top) CHECK(total_degree(m) < total_degree(top));
    }
  }
}

TEST_CASE("structure constants are integers") {
  Gen g(5);
  for (int i = 0; i < kCases; ++i) {
    const AlgebraId id = g.algebra();
    const auto dim = static_cast<std::size_t>(dimension(id));
    const Polynomial p = product(id, g.monomial(dim, 5), g.monomial(dim, 5));
    for (const auto& [m, c] : p.terms()) {
      CHECK(c.is_integer());
    }
  }
}

TEST_CASE("oracle is associative on random words") {
  // Concatenating and straightening must not depend on where the split falls.
  Gen g(6);
  for (int i = 0; i < kCases; ++i) {
    const AlgebraId id = g.algebra();
    const auto spec = builtin(id);
    const auto dim = static_cast<std::size_t>(spec.dim());
    const Monomial a = g.monomial(dim, 3), b = g.monomial(dim, 3), c = g.monomial(dim, 3);
    const Polynomial ab = oracle_product(spec, a, b);
    const Polynomial bc = oracle_product(spec, b, c);
    CHECK(oracle_product(spec, ab, Polynomial::from_monomial(c)) ==
          oracle_product(spec, Polynomial::from_monomial(a), bc));
  }
}

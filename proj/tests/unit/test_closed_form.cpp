#include <doctest.h>

#include "reference.hpp"
#include "uea/closed_form.hpp"
#include "uea/error.hpp"
#include "uea/expr.hpp"
#include "uea/straighten.hpp"

using namespace uea;

namespace {

Polynomial parse_poly(AlgebraId id, const char* text) {
  return to_polynomial(builtin(id), parse_expr(text, dimension(id)));
}

}  // namespace

TEST_CASE("spot values") {
  CHECK(product(AlgebraId::n3_1, Monomial{0, 0, 1}, Monomial{0, 1, 0}).to_string() ==
        "x2*x3 - x1");
  CHECK(product(AlgebraId::n3_1, Monomial{0, 0, 2}, Monomial{0, 2, 0}).to_string() ==
        "x2^2*x3^2 - 4*x1*x2*x3 + 2*x1^2");
  CHECK(product(AlgebraId::n5_6, Monomial{0, 0, 0, 0, 2}, Monomial{0, 0, 0, 1, 0}).to_string() ==
        "x4*x5^2 - 2*x3*x5 + x2");
  CHECK(product(AlgebraId::n4_1, Monomial{0, 0, 0, 1}, Monomial{0, 0, 1, 0}).to_string() ==
        "x3*x4 - x2");
}

TEST_CASE("ordered operands multiply by adding exponents") {
  for (auto id : kCatalog) {
    const auto dim = static_cast<std::size_t>(dimension(id));
    Monomial l(dim), r(dim);
    l[0] = 2;
    l[1] = 1;
    r[1] = 1;
    r[dim - 1] = 3;
    CHECK(product(id, l, r) == Polynomial::from_monomial(exponent_sum(l, r)));
  }
}

TEST_CASE("closed form equals the reference straightener") {
  for (const auto& alg : ref::catalog()) {
    const auto id = *parse_algebra_id(alg.name);
    const auto dim = static_cast<std::size_t>(alg.dim);
    const auto basis = monomials_up_to_degree(dim, dim == 5 ? 2 : 3);
    for (const auto& l : basis) {
      for (const auto& r : basis) {
        const ref::Exps le(l.exponents().begin(), l.exponents().end());
        const ref::Exps re(r.exponents().begin(), r.exponents().end());
        const auto got = ref::from_polynomial(product(id, l, r));
        const auto want = ref::product(alg, le, re);
        if (got != want) {
          FAIL_CHECK(alg.name << ' ' << l.to_string() << " * " << r.to_string() << ": "
                              << ref::to_string(got) << " vs " << ref::to_string(want));
        }
      }
    }
  }
}

TEST_CASE("large exponents fall back to arbitrary precision") {
  // Coefficients here exceed 64 bits (30! > 2^63).
  const Monomial l{0, 0, 30}, r{0, 30, 0};
  const Polynomial p = product(AlgebraId::n3_1, l, r);
  CHECK(p == oracle_product(builtin(AlgebraId::n3_1), l, r));
  CHECK(p.coefficient(Monomial{30, 0, 0}) == Rational::parse("265252859812191058636308480000000"));

  const Monomial l5{0, 0, 0, 12, 12}, r5{0, 9, 9, 9, 0};
  CHECK(product(AlgebraId::n5_6, l5, r5) == product_by_composition(builtin(AlgebraId::n5_6), l5, r5));
}

TEST_CASE("lemma composition agrees with the closed form") {
  for (auto id : kCatalog) {
    const auto dim = static_cast<std::size_t>(dimension(id));
    const auto basis = monomials_up_to_degree(dim, 2);
    CompositionTrace trace;
    for (const auto& l : basis) {
      for (const auto& r : basis) {
        INFO(to_string(id) << ' ' << l.to_string() << " * " << r.to_string());
        CHECK(product_by_composition(builtin(id), l, r, &trace) == product(id, l, r));
        CHECK_NOTHROW(product_checked(id, l, r));
      }
    }
    CHECK_FALSE(trace.empty());
  }
}

TEST_CASE("composition uses the expected lemma kinds") {
  CompositionTrace trace;
  product_by_composition(builtin(AlgebraId::n5_6), Monomial{0, 0, 0, 0, 3},
                         Monomial{0, 2, 2, 2, 0}, &trace);
  CHECK(trace.count(LemmaKind::chain_bc) == 1);
  CHECK(trace.count(LemmaKind::chain) == 0);

  trace.clear();
  product_by_composition(builtin(AlgebraId::n3_1), Monomial{0, 0, 2}, Monomial{0, 2, 0}, &trace);
  CHECK(trace == CompositionTrace{{LemmaKind::cpr, 1}});
}

TEST_CASE("composition rejects pairs outside every hypothesis") {
  // [x2, x1] = x1 cannot be matched: c would have to equal b.
  LieAlgebraSpec aff("aff", 2, {{2, 1, {{1, 1}}}});
  CHECK_THROWS_AS(product_by_composition(aff, Monomial{0, 1}, Monomial{1, 0}), HypothesisMismatch);
}

TEST_CASE("bilinear product") {
  const auto id = AlgebraId::n4_1;
  const Polynomial l = parse_poly(id, "2*x4 - 1/2*x3^2");
  const Polynomial r = parse_poly(id, "x3 + x2 x1");
  CHECK(product(id, l, r) == oracle_product(builtin(id), l, r));
  CHECK(product(id, l, Polynomial(4)).is_zero());
}

TEST_CASE("dimension checks") {
  CHECK_THROWS_AS(product(AlgebraId::n3_1, Monomial{1, 0}, Monomial{0, 0, 1}), DimensionMismatch);
  CHECK_THROWS_AS(product(AlgebraId::n5_1, Polynomial(3), Polynomial(5)), DimensionMismatch);
}

#include "uea/lemmas.hpp"

#include <functional>

#include "uea/combinatorics.hpp"

namespace uea {

namespace {

// How much of b (u_weight) and of a (t_weight) one unit of each summation
// index consumes. Index 0 is j or k1.
struct IndexShape {
  std::vector<unsigned> u_weight;
  std::vector<unsigned> t_weight;
  std::vector<Role> produces;
};

IndexShape shape_of(LemmaKind kind) {
  switch (kind) {
    case LemmaKind::cpr: return {{1}, {1}, {Role::c}};
    case LemmaKind::acd: return {{1, 1}, {1, 2}, {Role::c, Role::d}};
    case LemmaKind::bcd_acg: return {{1, 2, 1}, {1, 1, 2}, {Role::c, Role::d, Role::g}};
    case LemmaKind::chain: return {{1, 1, 1}, {1, 2, 3}, {Role::c, Role::d, Role::g}};
    case LemmaKind::chain_bc:
      return {{1, 1, 1, 2}, {1, 2, 3, 1}, {Role::c, Role::d, Role::g, Role::g}};
  }
  return {};
}

// Calls visit(k, b_used, a_used) for every index tuple inside the region,
// in lexicographic order.
void for_each_index(const IndexShape& shape, unsigned t, unsigned u,
                    const std::function<void(const std::vector<unsigned>&, unsigned, unsigned)>& visit) {
  std::vector<unsigned> k(shape.u_weight.size(), 0);
  std::function<void(std::size_t, unsigned, unsigned)> rec = [&](std::size_t pos, unsigned used_u,
                                                                 unsigned used_t) {
    if (pos == k.size()) {
      visit(k, used_u, used_t);
      return;
    }
    for (unsigned v = 0;; ++v) {
      const unsigned nu = used_u + v * shape.u_weight[pos];
      const unsigned nt = used_t + v * shape.t_weight[pos];
      if (nu > u || nt > t) break;
      k[pos] = v;
      rec(pos + 1, nu, nt);
    }
    k[pos] = 0;
  };
  rec(0, 0, 0);
}

StraighteningTerm make_term(const IndexShape& shape, const std::vector<unsigned>& k, unsigned t,
                            unsigned u, unsigned b_used, unsigned a_used, const mpz_class& coeff) {
  StraighteningTerm term;
  term.multi_index = k;
  term.coeff = Rational(coeff);
  for (std::size_t i = 0; i < k.size(); ++i) {
    term.role_exponents[static_cast<std::size_t>(shape.produces[i])] += k[i];
  }
  term.role_exponents[static_cast<std::size_t>(Role::b)] = u - b_used;
  term.role_exponents[static_cast<std::size_t>(Role::a)] = t - a_used;
  return term;
}

template <typename CoeffFn>
StraighteningExpansion expand(LemmaKind kind, unsigned t, unsigned u, CoeffFn coeff_of) {
  const IndexShape shape = shape_of(kind);
  StraighteningExpansion out{kind, t, u, {}};
  for_each_index(shape, t, u, [&](const std::vector<unsigned>& k, unsigned b_used, unsigned a_used) {
    out.terms.push_back(make_term(shape, k, t, u, b_used, a_used, coeff_of(k)));
  });
  return out;
}

}  // namespace

std::string_view to_string(LemmaKind kind) {
  switch (kind) {
    case LemmaKind::cpr: return "cpr";
    case LemmaKind::acd: return "acd";
    case LemmaKind::bcd_acg: return "bcd_acg";
    case LemmaKind::chain: return "chain";
    case LemmaKind::chain_bc: return "chain_bc";
  }
  return "?";
}

std::string_view to_string(Role role) {
  static constexpr std::array<std::string_view, kRoleCount> names = {"a", "b", "c", "d", "g"};
  return names[static_cast<std::size_t>(role)];
}

std::vector<Role> roles_of(LemmaKind kind) {
  switch (kind) {
    case LemmaKind::cpr: return {Role::a, Role::b, Role::c};
    case LemmaKind::acd: return {Role::a, Role::b, Role::c, Role::d};
    default: return {Role::a, Role::b, Role::c, Role::d, Role::g};
  }
}

StraighteningExpansion cpr_terms(unsigned r, unsigned s) {
  // C(r,j) C(s,j) j!
  return expand(LemmaKind::cpr, r, s, [&](const std::vector<unsigned>& k) {
    const unsigned j = k[0];
    return mpz_class(binomial(r, j) * binomial(s, j) * factorial(j));
  });
}

StraighteningExpansion lemma_acd_terms(unsigned t, unsigned u) {
  // C(u,k1+k2) C(t,k1+2k2) C(k1+k2,k1) (k1+2k2)!/2^k2
  return expand(LemmaKind::acd, t, u, [&](const std::vector<unsigned>& k) {
    const unsigned k1 = k[0], k2 = k[1];
    const mpz_class weight = exact_quotient(factorial(k1 + 2 * k2), power(2, k2));
    return mpz_class(binomial(u, k1 + k2) * binomial(t, k1 + 2 * k2) * binomial(k1 + k2, k1) *
                     weight);
  });
}

StraighteningExpansion lemma_bcd_acg_terms(unsigned t, unsigned u) {
  // C(u,P) C(t,Q) P! Q! / (2^(k2+k3) k3! k2! k1!),  P = k1+2k2+k3, Q = k1+k2+2k3
  return expand(LemmaKind::bcd_acg, t, u, [&](const std::vector<unsigned>& k) {
    const unsigned k1 = k[0], k2 = k[1], k3 = k[2];
    const unsigned p = k1 + 2 * k2 + k3, q = k1 + k2 + 2 * k3;
    const mpz_class weight =
        exact_quotient(factorial(p) * factorial(q),
                       power(2, k2 + k3) * factorial(k3) * factorial(k2) * factorial(k1));
    return mpz_class(binomial(u, p) * binomial(t, q) * weight);
  });
}

StraighteningExpansion lemma_chain_terms(unsigned t, unsigned u) {
  // C(u,P) C(t,Q) P! Q! / ((2!)^k2 (3!)^k3 k3! k2! k1!),  P = k1+k2+k3, Q = k1+2k2+3k3
  return expand(LemmaKind::chain, t, u, [&](const std::vector<unsigned>& k) {
    const unsigned k1 = k[0], k2 = k[1], k3 = k[2];
    const unsigned p = k1 + k2 + k3, q = k1 + 2 * k2 + 3 * k3;
    const mpz_class weight = exact_quotient(
        factorial(p) * factorial(q),
        power(2, k2) * power(6, k3) * factorial(k3) * factorial(k2) * factorial(k1));
    return mpz_class(binomial(u, p) * binomial(t, q) * weight);
  });
}

StraighteningExpansion lemma_chain_bc_terms(unsigned t, unsigned u) {
  // C(u,P) C(t,Q) P! Q! / ((2!)^(k2+k4) (3!)^k3 k4! k3! k2! k1!) (-g)^k4,
  // P = k1+k2+k3+2k4, Q = k1+2k2+3k3+k4
  auto out = expand(LemmaKind::chain_bc, t, u, [&](const std::vector<unsigned>& k) {
    const unsigned k1 = k[0], k2 = k[1], k3 = k[2], k4 = k[3];
    const unsigned p = k1 + k2 + k3 + 2 * k4, q = k1 + 2 * k2 + 3 * k3 + k4;
    const mpz_class weight =
        exact_quotient(factorial(p) * factorial(q), power(2, k2 + k4) * power(6, k3) *
                                                        factorial(k4) * factorial(k3) *
                                                        factorial(k2) * factorial(k1));
    return mpz_class(binomial(u, p) * binomial(t, q) * weight);
  });
  for (auto& term : out.terms) term.neg_g_exponent = term.multi_index[3];
  return out;
}

StraighteningExpansion lemma_terms(LemmaKind kind, unsigned t, unsigned u) {
  switch (kind) {
    case LemmaKind::cpr: return cpr_terms(t, u);
    case LemmaKind::acd: return lemma_acd_terms(t, u);
    case LemmaKind::bcd_acg: return lemma_bcd_acg_terms(t, u);
    case LemmaKind::chain: return lemma_chain_terms(t, u);
    case LemmaKind::chain_bc: return lemma_chain_bc_terms(t, u);
  }
  return {};
}

std::optional<Rational> divided_power_coeff(long k) {
  if (k < 0) return std::nullopt;
  return Rational(mpz_class(1), factorial(static_cast<unsigned long>(k)));
}

std::vector<DividedTerm> divided_form_terms(LemmaKind kind, unsigned t, unsigned u) {
  const IndexShape shape = shape_of(kind);
  // Scalar in front of each divided-power product: 1 / prod (denominator_i)^k_i.
  std::vector<unsigned long> denominators;
  switch (kind) {
    case LemmaKind::cpr: denominators = {1}; break;
    case LemmaKind::acd: denominators = {1, 2}; break;
    case LemmaKind::bcd_acg: denominators = {1, 2, 2}; break;
    case LemmaKind::chain: denominators = {1, 2, 6}; break;
    case LemmaKind::chain_bc: denominators = {1, 2, 6, 2}; break;
  }

  std::vector<DividedTerm> out;
  for_each_index(shape, t, u, [&](const std::vector<unsigned>& k, unsigned b_used, unsigned a_used) {
    DividedTerm term;
    term.multi_index = k;
    mpz_class den = 1;
    for (std::size_t i = 0; i < k.size(); ++i) den *= power(denominators[i], k[i]);
    term.coeff = Rational(mpz_class(1), den);
    // Written order: (-g)^(k4) g^(k3) d^(k2) c^(k1) b^(.) a^(.)
    for (std::size_t i = k.size(); i-- > 0;) term.factors.emplace_back(shape.produces[i], k[i]);
    term.factors.emplace_back(Role::b, u - b_used);
    term.factors.emplace_back(Role::a, t - a_used);
    if (kind == LemmaKind::chain_bc) term.neg_g_exponent = k[3];
    out.push_back(std::move(term));
  });
  return out;
}

}  // namespace uea

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "uea/rational.hpp"

namespace uea {

// Straightening identities for a^t b^u, by bracket hypothesis on the roles:
//   cpr       [a,b]=c
//   acd       [a,b]=c, [a,c]=d
//   bcd_acg   [a,b]=c, [b,c]=d, [a,c]=g
//   chain     [a,b]=c, [a,c]=d, [a,d]=g
//   chain_bc  [a,b]=c, [a,c]=d, [a,d]=g, [b,c]=-g
// with every other bracket among the roles zero.
enum class LemmaKind { cpr, acd, bcd_acg, chain, chain_bc };

inline constexpr std::array<LemmaKind, 5> kLemmaKinds = {
    LemmaKind::cpr, LemmaKind::acd, LemmaKind::bcd_acg, LemmaKind::chain, LemmaKind::chain_bc};

std::string_view to_string(LemmaKind kind);

enum class Role : std::size_t { a = 0, b, c, d, g };
inline constexpr std::size_t kRoleCount = 5;
inline constexpr std::array<Role, kRoleCount> kRoles = {Role::a, Role::b, Role::c, Role::d, Role::g};

std::string_view to_string(Role role);

// Roles the lemma's hypothesis mentions, in order a, b, c, d, g.
std::vector<Role> roles_of(LemmaKind kind);

// One summand  coeff * (-1)^neg_g_exponent * g^. d^. c^. b^. a^.  of a lemma.
struct StraighteningTerm {
  // j for cpr, (k1, k2[, k3[, k4]]) otherwise.
  std::vector<unsigned> multi_index;
  // Positive integer; the (-1)^k4 of chain_bc is kept in neg_g_exponent.
  Rational coeff;
  std::array<unsigned, kRoleCount> role_exponents{};
  // k4 of the (-g)^k4 factor; already counted in role_exponents[g].
  unsigned neg_g_exponent = 0;

  unsigned exponent(Role r) const { return role_exponents[static_cast<std::size_t>(r)]; }
  Rational signed_coeff() const { return neg_g_exponent % 2 == 0 ? coeff : -coeff; }
};

// The right side of a^t b^u for one lemma, terms in lexicographic multi-index order.
struct StraighteningExpansion {
  LemmaKind kind = LemmaKind::cpr;
  unsigned t = 0;
  unsigned u = 0;
  std::vector<StraighteningTerm> terms;
};

StraighteningExpansion cpr_terms(unsigned r, unsigned s);
StraighteningExpansion lemma_acd_terms(unsigned t, unsigned u);
StraighteningExpansion lemma_bcd_acg_terms(unsigned t, unsigned u);
StraighteningExpansion lemma_chain_terms(unsigned t, unsigned u);
StraighteningExpansion lemma_chain_bc_terms(unsigned t, unsigned u);
StraighteningExpansion lemma_terms(LemmaKind kind, unsigned t, unsigned u);

// 1/k! for k >= 0. Negative k returns nullopt: u^(k) = 0, the term vanishes.
std::optional<Rational> divided_power_coeff(long k);

// Summand of the divided-power form a^(t) b^(u) = sum coeff * (-1)^sign * prod role^(e).
// Factors keep (-g)^(k4) and g^(k3) apart, as written.
struct DividedTerm {
  std::vector<unsigned> multi_index;
  Rational coeff;
  std::vector<std::pair<Role, unsigned>> factors;
  unsigned neg_g_exponent = 0;
};

std::vector<DividedTerm> divided_form_terms(LemmaKind kind, unsigned t, unsigned u);

}  // namespace uea

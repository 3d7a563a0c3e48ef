#pragma once

#include <array>
#include <optional>
#include <utility>

#include "uea/lemmas.hpp"
#include "uea/lie_algebra.hpp"
#include "uea/polynomial.hpp"

namespace uea {

// A role stands for sign * x_gen.
struct RoleTarget {
  GeneratorIndex gen;
  int sign = 1;
};

// Instantiates lemma roles as signed generators of an ambient algebra.
class RoleBinding {
 public:
  explicit RoleBinding(LieAlgebraSpec spec) : spec_(std::move(spec)) {}

  RoleBinding& bind(Role role, GeneratorIndex gen, int sign = 1);

  const LieAlgebraSpec& spec() const noexcept { return spec_; }
  const std::optional<RoleTarget>& target(Role role) const {
    return roles_[static_cast<std::size_t>(role)];
  }

  // Throws HypothesisMismatch naming the first bracket that deviates from the
  // lemma, or OrderingError unless a > b > c > d > g on the bound indices.
  void check(LemmaKind kind) const;

 private:
  LieAlgebraSpec spec_;
  std::array<std::optional<RoleTarget>, kRoleCount> roles_{};
};

// Routes each role exponent to its generator and folds in the role signs.
// The binding is checked against expansion.kind first.
Polynomial apply_roles(const RoleBinding& binding, const StraighteningExpansion& expansion);

// Finds the lemma whose hypothesis the pair (x_a, x_b), a > b, satisfies in
// spec, with c = [x_a, x_b] and the remaining roles read off the brackets.
// nullopt when [x_a, x_b] = 0 or no lemma fits.
std::optional<std::pair<LemmaKind, RoleBinding>> match_lemma(const LieAlgebraSpec& spec,
                                                             GeneratorIndex a, GeneratorIndex b);

}  // namespace uea

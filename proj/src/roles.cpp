#include "uea/roles.hpp"

#include <algorithm>
#include <string>

#include "uea/error.hpp"

namespace uea {

namespace {

std::string describe(const LieElement& v) { return v.is_zero() ? "0" : v.to_string(); }

// Required value of [first, second]: zero, or sign * another role.
struct Requirement {
  Role first;
  Role second;
  std::optional<Role> result;
  int sign = 1;
};

std::vector<Requirement> nonzero_requirements(LemmaKind kind) {
  switch (kind) {
    case LemmaKind::cpr: return {{Role::a, Role::b, Role::c}};
    case LemmaKind::acd: return {{Role::a, Role::b, Role::c}, {Role::a, Role::c, Role::d}};
    case LemmaKind::bcd_acg:
      return {{Role::a, Role::b, Role::c}, {Role::b, Role::c, Role::d}, {Role::a, Role::c, Role::g}};
    case LemmaKind::chain:
      return {{Role::a, Role::b, Role::c}, {Role::a, Role::c, Role::d}, {Role::a, Role::d, Role::g}};
    case LemmaKind::chain_bc:
      return {{Role::a, Role::b, Role::c},
              {Role::a, Role::c, Role::d},
              {Role::a, Role::d, Role::g},
              {Role::b, Role::c, Role::g, -1}};
  }
  return {};
}

// Single signed generator equal to v, if v has that shape.
std::optional<RoleTarget> as_signed_generator(const LieElement& v) {
  std::optional<RoleTarget> found;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i].is_zero()) continue;
    if (found || !(v[i] == Rational(1) || v[i] == Rational(-1))) return std::nullopt;
    found = RoleTarget{GeneratorIndex{static_cast<int>(i + 1)}, v[i].sign()};
  }
  return found;
}

}  // namespace

RoleBinding& RoleBinding::bind(Role role, GeneratorIndex gen, int sign) {
  if (gen.value < 1 || gen.value > spec_.dim()) {
    throw RangeError("role " + std::string(to_string(role)) + " bound to x" +
                     std::to_string(gen.value) + " outside " + spec_.name());
  }
  if (sign != 1 && sign != -1) throw Error("role sign must be +1 or -1");
  roles_[static_cast<std::size_t>(role)] = RoleTarget{gen, sign};
  return *this;
}

void RoleBinding::check(LemmaKind kind) const {
  if (!spec_.well_formed()) throw Error("binding over malformed spec '" + spec_.name() + "'");
  const auto roles = roles_of(kind);
  for (Role r : kRoles) {
    const bool needed = std::find(roles.begin(), roles.end(), r) != roles.end();
    if (needed && !target(r)) {
      throw HypothesisMismatch("lemma " + std::string(to_string(kind)) + " needs role " +
                               std::string(to_string(r)));
    }
    if (!needed && target(r)) {
      throw HypothesisMismatch("lemma " + std::string(to_string(kind)) + " has no role " +
                               std::string(to_string(r)));
    }
  }
  for (std::size_t i = 1; i < roles.size(); ++i) {
    if (!(target(roles[i - 1])->gen > target(roles[i])->gen)) {
      throw OrderingError("role " + std::string(to_string(roles[i - 1])) + " must be bound above " +
                          std::string(to_string(roles[i])) + " in the PBW order");
    }
  }

  const auto n = static_cast<std::size_t>(spec_.dim());
  auto element = [&](Role r) {
    const auto& t = *target(r);
    return LieElement::generator(n, t.gen.value, Rational(t.sign));
  };
  const auto required = nonzero_requirements(kind);
  for (std::size_t i = 0; i < roles.size(); ++i) {
    for (std::size_t j = i + 1; j < roles.size(); ++j) {
      const Role x = roles[i], y = roles[j];
      LieElement expected(n);
      for (const auto& req : required) {
        if (req.first == x && req.second == y) expected = Rational(req.sign) * element(*req.result);
      }
      const LieElement actual = bracket(spec_, element(x), element(y));
      if (actual != expected) {
        throw HypothesisMismatch("[" + std::string(to_string(x)) + "," + std::string(to_string(y)) +
                                 "] is " + describe(actual) + " in " + spec_.name() +
                                 " but lemma " + std::string(to_string(kind)) + " requires " +
                                 describe(expected));
      }
    }
  }
}

Polynomial apply_roles(const RoleBinding& binding, const StraighteningExpansion& expansion) {
  binding.check(expansion.kind);
  const auto n = static_cast<std::size_t>(binding.spec().dim());
  Polynomial out(n);
  for (const auto& term : expansion.terms) {
    Monomial m(n);
    Rational coeff = term.signed_coeff();
    for (Role r : kRoles) {
      const unsigned e = term.exponent(r);
      if (e == 0) continue;
      const auto& t = *binding.target(r);
      m[static_cast<std::size_t>(t.gen.value - 1)] += e;
      if (t.sign < 0 && e % 2 == 1) coeff = -coeff;
    }
    out.add_term(m, coeff);
  }
  return out;
}

std::optional<std::pair<LemmaKind, RoleBinding>> match_lemma(const LieAlgebraSpec& spec,
                                                             GeneratorIndex a, GeneratorIndex b) {
  const auto n = static_cast<std::size_t>(spec.dim());
  auto signed_element = [&](const RoleTarget& t) {
    return LieElement::generator(n, t.gen.value, Rational(t.sign));
  };
  const RoleTarget ta{a, 1}, tb{b, 1};
  const auto tc = as_signed_generator(bracket(spec, signed_element(ta), signed_element(tb)));
  if (!tc) return std::nullopt;
  auto br = [&](const RoleTarget& x, const RoleTarget& y) {
    return as_signed_generator(bracket(spec, signed_element(x), signed_element(y)));
  };

  for (LemmaKind kind : kLemmaKinds) {
    std::optional<RoleTarget> td, tg;
    switch (kind) {
      case LemmaKind::cpr:
        break;
      case LemmaKind::acd:
        td = br(ta, *tc);
        if (!td) continue;
        break;
      case LemmaKind::bcd_acg:
        td = br(tb, *tc);
        tg = br(ta, *tc);
        if (!td || !tg) continue;
        break;
      case LemmaKind::chain:
      case LemmaKind::chain_bc:
        td = br(ta, *tc);
        if (!td) continue;
        tg = br(ta, *td);
        if (!tg) continue;
        break;
    }
    RoleBinding binding(spec);
    binding.bind(Role::a, ta.gen, ta.sign).bind(Role::b, tb.gen, tb.sign).bind(Role::c, tc->gen, tc->sign);
    if (td) binding.bind(Role::d, td->gen, td->sign);
    if (tg) binding.bind(Role::g, tg->gen, tg->sign);
    try {
      binding.check(kind);
    } catch (const HypothesisMismatch&) {
      continue;
    } catch (const OrderingError&) {
      continue;
    }
    return std::pair{kind, std::move(binding)};
  }
  return std::nullopt;
}

}  // namespace uea

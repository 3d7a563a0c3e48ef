// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if
// any gating criterion (1-9) fails; criterion 10 is reported only.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "uea/closed_form.hpp"
#include "uea/combinatorics.hpp"
#include "uea/nilpotency.hpp"
#include "uea/spec_json.hpp"
#include "uea/straighten.hpp"
#include "uea/table.hpp"

using namespace uea;

namespace {

#ifdef UEA_NIGHTLY
constexpr unsigned kDim5Degree = 4;
#else
constexpr unsigned kDim5Degree = 3;
#endif

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failure messages.
class Failures {
 public:
  void add(const std::string& msg) {
    if (count_++ < 3) msgs_ += (msgs_.empty() ? "" : "; ") + msg;
  }
  Outcome outcome(const std::string& ok_detail) const {
    if (count_ == 0) return {true, ok_detail};
    return {false, std::to_string(count_) + " failure(s): " + msgs_};
  }

 private:
  std::size_t count_ = 0;
  std::string msgs_;
};

std::string pair_str(AlgebraId id, const Monomial& l, const Monomial& r) {
  return std::string(to_string(id)) + " " + l.to_string() + " * " + r.to_string();
}

unsigned grid_degree(AlgebraId id) { return dimension(id) == 5 ? kDim5Degree : 4; }

// Criteria 1 and 6 share the grid.
struct GridResult {
  Outcome equivalence;
  Outcome integrality;
};

GridResult run_grid() {
  Failures eq, integ;
  std::size_t pairs = 0, constants = 0;
  for (AlgebraId id : kCatalog) {
    const LieAlgebraSpec spec = builtin(id);
    const auto basis = monomials_up_to_degree(static_cast<std::size_t>(spec.dim()), grid_degree(id));
    for (const auto& l : basis) {
      for (const auto& r : basis) {
        ++pairs;
        const Polynomial closed = product(id, l, r);
        if (closed != oracle_product(spec, l, r)) eq.add(pair_str(id, l, r));
        for (const auto& [m, c] : closed.terms()) {
          ++constants;
          if (!c.is_integer()) integ.add(pair_str(id, l, r) + " coeff " + c.to_string());
        }
      }
    }
  }
  const std::string bounds =
      "degree <= 4 (dim 3-4), <= " + std::to_string(kDim5Degree) + " (dim 5)";
  return {eq.outcome(std::to_string(pairs) + " pairs, exact equality, " + bounds),
          integ.outcome(std::to_string(constants) + " structure constants, all denominator 1")};
}

Polynomial poly(std::size_t dim, std::initializer_list<std::pair<Monomial, long>> terms) {
  Polynomial p(dim);
  for (const auto& [m, c] : terms) p.add_term(m, c);
  return p;
}

using RoleExps = std::array<unsigned, kRoleCount>;

std::map<RoleExps, Rational> role_map(const StraighteningExpansion& e) {
  std::map<RoleExps, Rational> out;
  for (const auto& t : e.terms) out[t.role_exponents] = out[t.role_exponents] + t.signed_coeff();
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Outcome spot_values() {
  Failures f;
  const auto n31 = AlgebraId::n3_1;
  if (product(n31, Monomial{0, 0, 1}, Monomial{0, 1, 0}) !=
      poly(3, {{{0, 1, 1}, 1}, {{1, 0, 0}, -1}}))
    f.add("n3_1 x3*x2");
  if (product(n31, Monomial{0, 0, 2}, Monomial{0, 2, 0}) !=
      poly(3, {{{0, 2, 2}, 1}, {{1, 1, 1}, -4}, {{2, 0, 0}, 2}}))
    f.add("n3_1 x3^2*x2^2");
  if (product(AlgebraId::n5_6, Monomial{0, 0, 0, 0, 2}, Monomial{0, 0, 0, 1, 0}) !=
      poly(5, {{{0, 0, 0, 1, 2}, 1}, {{0, 0, 1, 0, 1}, -2}, {{0, 1, 0, 0, 0}, 1}}))
    f.add("n5_6 x5^2*x4");

  // (a, b, c, d, g) exponents.
  using M = std::map<RoleExps, Rational>;
  if (role_map(lemma_acd_terms(2, 1)) != M{{{2, 1, 0, 0, 0}, 1}, {{1, 0, 1, 0, 0}, 2}, {{0, 0, 0, 1, 0}, 1}})
    f.add("a^2 b");
  if (role_map(lemma_bcd_acg_terms(1, 2)) != M{{{1, 2, 0, 0, 0}, 1}, {{0, 1, 1, 0, 0}, 2}, {{0, 0, 0, 1, 0}, 1}})
    f.add("a b^2 (b,c,d)");
  if (role_map(lemma_chain_terms(3, 1)) !=
      M{{{3, 1, 0, 0, 0}, 1}, {{2, 0, 1, 0, 0}, 3}, {{1, 0, 0, 1, 0}, 3}, {{0, 0, 0, 0, 1}, 1}})
    f.add("a^3 b");
  if (role_map(lemma_chain_bc_terms(1, 2)) != M{{{1, 2, 0, 0, 0}, 1}, {{0, 1, 1, 0, 0}, 2}, {{0, 0, 0, 0, 1}, -1}})
    f.add("a b^2 (-g)");
  return f.outcome("3 products and 4 lemma base cases");
}

Outcome axioms(const std::string& fixture_dir) {
  Failures f;
  for (AlgebraId id : kCatalog) {
    if (!validate(builtin(id)).ok) f.add(std::string(to_string(id)) + " rejected");
  }
  const auto report = validate(load_spec(fixture_dir + "/filiform5_flipped.json"));
  std::string located;
  if (report.ok || report.jacobi.empty()) {
    f.add("flipped fixture accepted");
  } else {
    const auto& v = report.jacobi.front();
    located = "(x" + std::to_string(v.triple[0]) + ",x" + std::to_string(v.triple[1]) + ",x" +
              std::to_string(v.triple[2]) + ") residual " + v.residual.to_string();
    if (v.residual.is_zero()) f.add("zero residual reported");
  }
  return f.outcome("8 catalog algebras valid; flipped [x4,x2] fixture fails at " + located);
}

Outcome nilpotency() {
  const std::map<AlgebraId, std::size_t> classes = {
      {AlgebraId::n3_1, 2}, {AlgebraId::n4_1, 3}, {AlgebraId::n5_1, 2}, {AlgebraId::n5_2, 3},
      {AlgebraId::n5_3, 2}, {AlgebraId::n5_4, 3}, {AlgebraId::n5_5, 4}, {AlgebraId::n5_6, 4}};
  Failures f;
  std::string got;
  for (const auto& [id, want] : classes) {
    const auto spec = builtin(id);
    const auto profile = lower_central_series(spec);
    const std::size_t cls = profile.nilpotency_class.value_or(0);
    got += std::string(got.empty() ? "" : " ") + std::string(to_string(id)) + ":" + std::to_string(cls);
    if (!profile.nilpotent || cls != want) f.add(std::string(to_string(id)) + " class " + std::to_string(cls));
    try {
      engel_check(spec);
    } catch (const std::exception& e) {
      f.add(std::string(to_string(id)) + " engel: " + e.what());
    }
  }
  return f.outcome("classes " + got + "; engel_check ok on all");
}

Outcome algebraic_laws() {
  constexpr int kCases = 250;
  std::mt19937 rng(2026);
  Failures f;
  auto pick_algebra = [&] {
    return kCatalog[std::uniform_int_distribution<std::size_t>(0, kCatalog.size() - 1)(rng)];
  };
  auto monomial = [&](std::size_t dim, unsigned deg) {
    const auto basis = monomials_up_to_degree(dim, deg);
    return basis[std::uniform_int_distribution<std::size_t>(0, basis.size() - 1)(rng)];
  };
  auto polynomial = [&](std::size_t dim, unsigned deg) {
    Polynomial p(dim);
    std::uniform_int_distribution<long> num(-4, 4), den(1, 3), n(1, 3);
    for (long i = n(rng); i > 0; --i) p.add_term(monomial(dim, deg), Rational(num(rng), den(rng)));
    return p;
  };

  for (int i = 0; i < kCases; ++i) {
    const AlgebraId id = pick_algebra();
    const auto dim = static_cast<std::size_t>(dimension(id));
    const Polynomial a = polynomial(dim, 3), b = polynomial(dim, 3), c = polynomial(dim, 3);
    if (product(id, product(id, a, b), c) != product(id, a, product(id, b, c))) {
      f.add("associativity in " + std::string(to_string(id)));
    }
  }
  for (int i = 0; i < kCases; ++i) {
    const AlgebraId id = pick_algebra();
    const auto dim = static_cast<std::size_t>(dimension(id));
    const Polynomial one = Polynomial::constant(dim, 1), p = polynomial(dim, 4);
    if (product(id, one, p) != p || product(id, p, one) != p) f.add("unit law");
  }
  for (int i = 0; i < kCases; ++i) {
    const AlgebraId id = pick_algebra();
    const auto spec = builtin(id);
    std::uniform_int_distribution<int> g(1, spec.dim());
    const int x = g(rng), y = g(rng);
    const auto dim = static_cast<std::size_t>(spec.dim());
    const Monomial mx = Monomial::generator(dim, static_cast<std::size_t>(x));
    const Monomial my = Monomial::generator(dim, static_cast<std::size_t>(y));
    if (product(id, mx, my) - product(id, my, mx) != bracket(spec, GeneratorIndex{x}, GeneratorIndex{y})) {
      f.add("commutator");
    }
  }
  for (int i = 0; i < kCases; ++i) {
    const AlgebraId id = pick_algebra();
    const auto dim = static_cast<std::size_t>(dimension(id));
    const Monomial l = monomial(dim, 4), r = monomial(dim, 4);
    const Monomial top = exponent_sum(l, r);
    const Polynomial p = product(id, l, r);
    bool ok = p.coefficient(top) == Rational(1);
    for (const auto& [m, c] : p.terms()) ok = ok && (m == top || total_degree(m) < total_degree(top));
    if (!ok) f.add("filtration " + pair_str(id, l, r));
  }
  return f.outcome(std::to_string(kCases) +
                   " cases each: associativity (degree <= 3), unit laws, commutator, filtration");
}

Outcome divided_powers() {
  Failures f;
  std::size_t checked = 0;
  for (LemmaKind k : kLemmaKinds) {
    for (unsigned t = 0; t <= 6; ++t) {
      for (unsigned u = 0; u <= 6; ++u) {
        const auto standard = lemma_terms(k, t, u);
        const auto divided = divided_form_terms(k, t, u);
        if (standard.terms.size() != divided.size()) {
          f.add(std::string(to_string(k)) + " term count");
          continue;
        }
        for (std::size_t i = 0; i < divided.size(); ++i) {
          Rational c = Rational(factorial(t) * factorial(u)) * divided[i].coeff;
          for (const auto& [role, e] : divided[i].factors) c = c * *divided_power_coeff(e);
          if (divided[i].neg_g_exponent % 2) c = -c;
          ++checked;
          if (c != standard.terms[i].signed_coeff()) {
            f.add(std::string(to_string(k)) + " t=" + std::to_string(t) + " u=" + std::to_string(u));
          }
        }
      }
    }
  }
  return f.outcome(std::to_string(checked) + " terms over 5 lemmas, t,u <= 6");
}

Outcome confluence() {
  Failures f;
  std::mt19937 rng(8);
  for (AlgebraId id : kCatalog) {
    const auto spec = builtin(id);
    std::uniform_int_distribution<int> letter(1, spec.dim()), len(0, 8);
    for (int i = 0; i < 1000; ++i) {
      Word w(static_cast<std::size_t>(len(rng)));
      for (int& g : w) g = letter(rng);
      if (straighten_word(spec, w, RewriteStrategy::leftmost) !=
          straighten_word(spec, w, RewriteStrategy::rightmost)) {
        f.add(std::string(to_string(id)) + " word");
      }
    }
  }
  return f.outcome("1000 random words of length <= 8 per algebra");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome determinism(const std::string& cli, const std::string& scratch) {
  Failures f;
  std::string via_cli = "CLI not run";
  if (!cli.empty()) {
    const std::string a = scratch + "/acceptance_n5_2_a.json", b = scratch + "/acceptance_n5_2_b.json";
    for (const auto& [out, workers] : {std::pair{a, "1"}, std::pair{b, "8"}}) {
      const std::string cmd = "\"" + cli + "\" table --algebra n5_2 --max-degree 2 --engine closed_form"
                              " --format json --workers " + workers + " --out \"" + out + "\"";
      if (std::system(cmd.c_str()) != 0) f.add("CLI failed: " + cmd);
    }
    const std::string ja = slurp(a), jb = slurp(b);
    if (ja.empty() || ja != jb) f.add("CLI outputs differ");
    via_cli = "CLI runs identical (" + std::to_string(ja.size()) + " bytes)";
  }
  const Table t1 = generate_table(AlgebraId::n5_2, 2, Engine::closed_form);
  const Table t2 = generate_table(AlgebraId::n5_2, 2, Engine::closed_form);
  if (export_table(t1.manifest, t1.records, TableFormat::json) !=
      export_table(t2.manifest, t2.records, TableFormat::json)) {
    f.add("in-process exports differ");
  }
  try {
    const Table c = generate_table(AlgebraId::n5_2, 2, Engine::cross_checked);
    if (c.records != t1.records) f.add("cross_checked records differ");
  } catch (const std::exception& e) {
    f.add(std::string("cross_checked: ") + e.what());
  }
  return f.outcome(via_cli + "; cross_checked: 0 divergences over 441 pairs");
}

Outcome performance() {
  const AlgebraId id = AlgebraId::n5_6;
  TableOptions opts;
  opts.workers = 1;
  auto best = [&](Engine e) {
    (void)generate_table(id, 3, e, opts);  // warm caches
    double b = 1e30;
    for (int i = 0; i < 5; ++i) {
      const auto t0 = std::chrono::steady_clock::now();
      (void)generate_table(id, 3, e, opts);
      b = std::min(b, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return b;
  };
  const double closed = best(Engine::closed_form);
  const double oracle = best(Engine::oracle);
  const double speedup = oracle / closed;
  char buf[160];
  std::snprintf(buf, sizeof buf, "n5_6 degree-3 grid: closed %.2f ms, oracle %.2f ms, speedup %.1fx (target 10x)",
                closed * 1e3, oracle * 1e3, speedup);
  return {speedup >= 10.0, buf};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string fixture_dir = argc > 1 ? argv[1] : UEA_FIXTURE_DIR;
  const std::string cli = argc > 2 ? argv[2] : "";
  const std::string scratch = argc > 3 ? argv[3] : ".";

  const GridResult grid = run_grid();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"oracle equivalence", [&] { return grid.equivalence; }},
      {"spot values", spot_values},
      {"axioms", [&] { return axioms(fixture_dir); }},
      {"nilpotency", nilpotency},
      {"algebraic laws", algebraic_laws},
      {"integrality", [&] { return grid.integrality; }},
      {"divided-power consistency", divided_powers},
      {"confluence", confluence},
      {"determinism", [&] { return determinism(cli, scratch); }},
      {"performance (non-gating)", performance},
  };

  bool gating_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << (i + 1) << ' ' << criteria[i].first << ": "
              << o.detail << '\n';
    if (!o.pass && i + 1 < 10) gating_ok = false;
  }
  return gating_ok ? 0 : 1;
}

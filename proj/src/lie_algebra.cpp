#include "uea/lie_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "uea/error.hpp"

namespace uea {

LieElement LieElement::generator(std::size_t dim, int gen, const Rational& coeff) {
  if (gen < 1 || static_cast<std::size_t>(gen) > dim) {
    throw RangeError("generator x" + std::to_string(gen) + " out of range for dimension " +
                     std::to_string(dim));
  }
  LieElement v(dim);
  v.coords_[static_cast<std::size_t>(gen - 1)] = coeff;
  return v;
}

bool LieElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c.is_zero(); });
}

LieElement& LieElement::operator+=(const LieElement& o) {
  if (o.dim() != dim()) throw DimensionMismatch("Lie elements of different dimension");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  if (o.dim() != dim()) throw DimensionMismatch("Lie elements of different dimension");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

LieElement LieElement::operator-() const { return Rational(-1) * *this; }

LieElement operator*(const Rational& c, const LieElement& v) {
  LieElement out = v;
  for (auto& x : out.coords_) x *= c;
  return out;
}

Polynomial LieElement::to_polynomial() const {
  Polynomial p(dim());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    p.add_term(Monomial::generator(dim(), i + 1), coords_[i]);
  }
  return p;
}

LieAlgebraSpec::LieAlgebraSpec(std::string name, int dim, std::vector<BracketEntry> entries)
    : name_(std::move(name)), dim_(dim), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const BracketEntry& a, const BracketEntry& b) {
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  });
  if (dim_ < 1) {
    shape_errors_.push_back("dimension must be positive, got " + std::to_string(dim_));
    dim_ = std::max(dim_, 0);
  }
  const auto n = static_cast<std::size_t>(dim_);
  table_.assign(n * n, {});

  auto in_range = [&](int g) { return g >= 1 && g <= dim_; };
  std::set<std::pair<int, int>> seen;
  for (const auto& e : entries_) {
    const std::string key = "[x" + std::to_string(e.i) + ",x" + std::to_string(e.j) + "]";
    bool usable = true;
    if (!in_range(e.i) || !in_range(e.j)) {
      shape_errors_.push_back("bracket key " + key + " out of range");
      usable = false;
    } else if (e.i <= e.j) {
      shape_errors_.push_back("bracket key " + key + " must have i > j");
      usable = false;
    } else if (!seen.emplace(e.i, e.j).second) {
      shape_errors_.push_back("duplicate bracket key " + key);
      usable = false;
    }
    for (const auto& t : e.value) {
      if (!in_range(t.gen)) {
        shape_errors_.push_back("bracket " + key + " names generator x" + std::to_string(t.gen) +
                                " out of range");
        usable = false;
      }
    }
    if (!usable) continue;

    // Merge repeated generators and drop zero coefficients.
    LieElement v(n);
    for (const auto& t : e.value) v[static_cast<std::size_t>(t.gen - 1)] += t.coeff;
    std::vector<BracketTerm> pos, neg;
    for (std::size_t g = 0; g < n; ++g) {
      if (v[g].is_zero()) continue;
      pos.push_back({static_cast<int>(g + 1), v[g]});
      neg.push_back({static_cast<int>(g + 1), -v[g]});
    }
    table_[static_cast<std::size_t>(e.i - 1) * n + static_cast<std::size_t>(e.j - 1)] =
        std::move(pos);
    table_[static_cast<std::size_t>(e.j - 1) * n + static_cast<std::size_t>(e.i - 1)] =
        std::move(neg);
  }
}

Polynomial bracket(const LieAlgebraSpec& spec, GeneratorIndex i, GeneratorIndex j) {
  for (int g : {i.value, j.value}) {
    if (g < 1 || g > spec.dim()) {
      throw RangeError("generator x" + std::to_string(g) + " out of range for " + spec.name());
    }
  }
  const auto n = static_cast<std::size_t>(spec.dim());
  Polynomial p(n);
  for (const auto& t : spec.bracket_terms(i.value, j.value)) {
    p.add_term(Monomial::generator(n, static_cast<std::size_t>(t.gen)), t.coeff);
  }
  return p;
}

LieElement bracket(const LieAlgebraSpec& spec, const LieElement& u, const LieElement& v) {
  const auto n = static_cast<std::size_t>(spec.dim());
  if (u.dim() != n || v.dim() != n) {
    throw DimensionMismatch("Lie element dimension does not match " + spec.name());
  }
  LieElement out(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (u[a].is_zero()) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (v[b].is_zero() || a == b) continue;
      const Rational scale = u[a] * v[b];
      for (const auto& t : spec.bracket_terms(static_cast<int>(a + 1), static_cast<int>(b + 1))) {
        out[static_cast<std::size_t>(t.gen - 1)] += scale * t.coeff;
      }
    }
  }
  return out;
}

ValidationReport validate(const LieAlgebraSpec& spec) {
  ValidationReport report;
  report.shape = spec.shape_errors();
  if (spec.well_formed()) {
    const int n = spec.dim();
    const auto dim = static_cast<std::size_t>(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
          const auto x = LieElement::generator(dim, i);
          const auto y = LieElement::generator(dim, j);
          const auto z = LieElement::generator(dim, k);
          const LieElement residual = bracket(spec, x, bracket(spec, y, z)) +
                                      bracket(spec, y, bracket(spec, z, x)) +
                                      bracket(spec, z, bracket(spec, x, y));
          if (!residual.is_zero()) {
            report.jacobi.push_back({{i, j, k}, residual.to_polynomial()});
          }
        }
      }
    }
  }
  report.ok = report.shape.empty() && report.jacobi.empty();
  return report;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  os << (ok ? "ok" : "INVALID") << '\n';
  for (const auto& s : shape) os << "  shape: " << s << '\n';
  for (const auto& v : jacobi) {
    os << "  jacobi (x" << v.triple[0] << ", x" << v.triple[1] << ", x" << v.triple[2]
       << "): residual " << v.residual << '\n';
  }
  return os.str();
}

}  // namespace uea

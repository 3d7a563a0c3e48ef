#include "uea/nilpotency.hpp"

#include <algorithm>
#include <utility>

#include "uea/error.hpp"

namespace uea {

namespace {

using IntRow = std::vector<mpz_class>;

IntRow to_integer_row(const LieElement& v) {
  mpz_class common = 1;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    common = lcm(common, v[i].denominator());
  }
  IntRow row(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    row[i] = v[i].numerator() * (common / v[i].denominator());
  }
  return row;
}

void make_primitive(IntRow& row) {
  mpz_class g = 0;
  for (const auto& x : row) g = gcd(g, x);
  if (g > 1) {
    for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

void require_well_formed(const LieAlgebraSpec& spec) {
  if (!spec.well_formed()) {
    throw Error("spec '" + spec.name() + "' is malformed: " + spec.shape_errors().front());
  }
}

}  // namespace

std::vector<LieElement> span_basis(const std::vector<LieElement>& vectors, std::size_t dim) {
  std::vector<IntRow> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.dim() != dim) throw DimensionMismatch("vector dimension mismatch in span_basis");
    rows.push_back(to_integer_row(v));
  }

  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
    auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                              [col](const IntRow& r) { return sgn(r[col]) != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
    const IntRow& p = rows[rank];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][col]) == 0) continue;
      const mpz_class factor = rows[r][col];
      for (std::size_t c = 0; c < dim; ++c) {
        rows[r][c] = p[col] * rows[r][c] - factor * p[c];
      }
      make_primitive(rows[r]);
    }
    ++rank;
  }

  std::vector<LieElement> basis;
  basis.reserve(rank);
  for (std::size_t r = 0; r < rank; ++r) {
    LieElement v(dim);
    for (std::size_t c = 0; c < dim; ++c) v[c] = Rational(rows[r][c]);
    basis.push_back(std::move(v));
  }
  return basis;
}

NilpotencyProfile lower_central_series(const LieAlgebraSpec& spec) {
  require_well_formed(spec);
  const auto n = static_cast<std::size_t>(spec.dim());

  std::vector<LieElement> current;
  for (std::size_t i = 1; i <= n; ++i) current.push_back(LieElement::generator(n, static_cast<int>(i)));

  NilpotencyProfile profile;
  profile.series_dims.push_back(n);
  while (!current.empty()) {
    std::vector<LieElement> brackets;
    for (std::size_t i = 1; i <= n; ++i) {
      const auto x = LieElement::generator(n, static_cast<int>(i));
      for (const auto& v : current) {
        auto w = bracket(spec, x, v);
        if (!w.is_zero()) brackets.push_back(std::move(w));
      }
    }
    auto next = span_basis(brackets, n);
    const bool stable = next.size() == current.size();
    profile.series_dims.push_back(next.size());
    if (stable) return profile;
    current = std::move(next);
  }
  profile.nilpotent = true;
  profile.nilpotency_class = profile.series_dims.size() - 1;
  return profile;
}

std::map<GeneratorIndex, int> engel_check(const LieAlgebraSpec& spec) {
  require_well_formed(spec);
  const int n = spec.dim();
  const auto dim = static_cast<std::size_t>(n);
  std::map<GeneratorIndex, int> out;
  for (int i = 1; i <= n; ++i) {
    const auto x = LieElement::generator(dim, i);
    std::vector<LieElement> images;
    for (int j = 1; j <= n; ++j) images.push_back(LieElement::generator(dim, j));
    int k = 0;
    bool vanished = false;
    while (k < n) {
      ++k;
      for (auto& y : images) y = bracket(spec, x, y);
      if (std::all_of(images.begin(), images.end(), [](const LieElement& y) { return y.is_zero(); })) {
        vanished = true;
        break;
      }
    }
    if (!vanished) {
      throw NotNilpotent("ad(x" + std::to_string(i) + ") is not nilpotent within " +
                         std::to_string(n) + " steps in " + spec.name());
    }
    out.emplace(GeneratorIndex{i}, k);
  }
  return out;
}

}  // namespace uea

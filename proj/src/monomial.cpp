#include "uea/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "uea/error.hpp"

namespace uea {

Monomial Monomial::generator(std::size_t dim, std::size_t gen) {
  if (gen < 1 || gen > dim) {
    throw RangeError("generator x" + std::to_string(gen) + " out of range for dimension " +
                     std::to_string(dim));
  }
  Monomial m(dim);
  m.exps_[gen - 1] = 1;
  return m;
}

bool Monomial::is_unit() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = total_degree(a) <=> total_degree(b); c != 0) return c;
  return a.exps_ <=> b.exps_;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (exps_[i] != 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::uint64_t total_degree(const Monomial& m) {
  return std::accumulate(m.exponents().begin(), m.exponents().end(), std::uint64_t{0});
}

Monomial exponent_sum(const Monomial& a, const Monomial& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("monomials of different dimension");
  Monomial out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] += b[i];
  return out;
}

namespace {

// Exponent vectors of exactly `degree` in lexicographic ascending order.
void compositions(std::size_t pos, unsigned remaining, std::vector<Monomial::Exponent>& cur,
                  std::vector<Monomial>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    cur[pos] = e;
    compositions(pos + 1, remaining - e, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_up_to_degree(std::size_t dim, unsigned max_degree) {
  std::vector<Monomial> out;
  if (dim == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<Monomial::Exponent> cur(dim, 0);
  for (unsigned d = 0; d <= max_degree; ++d) compositions(0, d, cur, out);
  return out;
}

}  // namespace uea

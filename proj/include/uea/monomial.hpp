#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace uea {

// Ordered PBW basis element x1^e1 ... xn^en stored as a dense exponent vector.
// exps[i] is the exponent of x_{i+1}.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t dim) : exps_(dim, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  static Monomial unit(std::size_t dim) { return Monomial(dim); }
  // x_gen with gen in 1..dim.
  static Monomial generator(std::size_t dim, std::size_t gen);

  std::size_t dim() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  bool is_unit() const noexcept;

  // Graded-lex: total degree first, then lexicographic on the exponent vector.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  // "x2*x3^2", "1" for the unit.
  std::string to_string() const;

 private:
  std::vector<Exponent> exps_;
};

std::uint64_t total_degree(const Monomial& m);

// Exponent-wise sum; the leading term of a PBW product.
Monomial exponent_sum(const Monomial& a, const Monomial& b);

// All monomials of total degree <= max_degree in graded-lex ascending order.
std::vector<Monomial> monomials_up_to_degree(std::size_t dim, unsigned max_degree);

}  // namespace uea

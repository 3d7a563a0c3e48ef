#include "uea/closed_form.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <type_traits>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "uea/combinatorics.hpp"
#include "uea/error.hpp"
#include "uea/roles.hpp"

namespace uea {

namespace {

#ifdef UEA_VERIFY_COMPOSITION
constexpr bool kVerifyComposition = true;
#else
constexpr bool kVerifyComposition = false;
#endif

// (k1+2k2)!/2^k2
mpz_class acd_weight(long k1, long k2) {
  return exact_quotient(factorial(k1 + 2 * k2), power(2, k2));
}

// (k1+2k2+k3)! (k1+k2+2k3)! / (2^(k2+k3) k3! k2! k1!)
mpz_class bcd_acg_weight(long k1, long k2, long k3) {
  return exact_quotient(factorial(k1 + 2 * k2 + k3) * factorial(k1 + k2 + 2 * k3),
                        power(2, k2 + k3) * factorial(k3) * factorial(k2) * factorial(k1));
}

// (k1+k2+k3)! (k1+2k2+3k3)! / ((2!)^k2 (3!)^k3 k3! k2! k1!)
mpz_class chain_weight(long k1, long k2, long k3) {
  return exact_quotient(factorial(k1 + k2 + k3) * factorial(k1 + 2 * k2 + 3 * k3),
                        power(2, k2) * power(6, k3) * factorial(k3) * factorial(k2) * factorial(k1));
}

// (k1+k2+k3+2k4)! (k1+2k2+3k3+k4)! / ((2!)^(k2+k4) (3!)^k3 k4! k3! k2! k1!)
mpz_class chain_bc_weight(long k1, long k2, long k3, long k4) {
  return exact_quotient(
      factorial(k1 + k2 + k3 + 2 * k4) * factorial(k1 + 2 * k2 + 3 * k3 + k4),
      power(2, k2 + k4) * power(6, k3) * factorial(k4) * factorial(k3) * factorial(k2) *
          factorial(k1));
}

// Overflow-checked 64-bit integer. An overflow poisons the value and the
// caller redoes the whole product with GMP integers.
struct Small {
  std::int64_t v = 0;
  bool ok = true;
};

inline Small operator*(Small a, Small b) {
  Small r;
  r.ok = a.ok && b.ok && !__builtin_mul_overflow(a.v, b.v, &r.v);
  return r;
}

// Cached tables over small arguments; anything outside is poisoned.
struct SmallOps {
  using N = Small;
  static constexpr long kBinomRows = 67;  // C(66, 33) < 2^63
  // Per-argument bound of the cached weight tables.
  template <std::size_t K>
  static constexpr long kWeightArg = K < 4 ? 12 : 8;

  static Small from_mpz(const mpz_class& z) {
    return z.fits_slong_p() ? Small{z.get_si(), true} : Small{0, false};
  }

  static Small binom(long n, long k) {
    static const auto table = [] {
      std::vector<std::int64_t> t(kBinomRows * kBinomRows, 0);
      for (long i = 0; i < kBinomRows; ++i) {
        t[i * kBinomRows] = 1;
        for (long j = 1; j <= i; ++j) {
          t[i * kBinomRows + j] = t[(i - 1) * kBinomRows + j - 1] + t[(i - 1) * kBinomRows + j];
        }
      }
      return t;
    }();
    if (k > n) return {0, true};
    if (n >= kBinomRows) return {0, false};
    return {table[static_cast<std::size_t>(n * kBinomRows + k)], true};
  }

  static Small fact(long n) {
    if (n > 20) return {0, false};
    std::int64_t f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return {f, true};
  }

  template <std::size_t K, class F>
  static Small cached(const std::array<long, K>& args, F compute) {
    static const auto table = [&] {
      std::size_t size = 1;
      for (std::size_t i = 0; i < K; ++i) size *= kWeightArg<K>;
      std::vector<Small> t(size);
      std::array<long, K> a{};
      for (std::size_t idx = 0; idx < size; ++idx) {
        std::size_t rest = idx;
        for (std::size_t i = 0; i < K; ++i) {
          a[i] = static_cast<long>(rest % kWeightArg<K>);
          rest /= kWeightArg<K>;
        }
        t[idx] = from_mpz(compute(a));
      }
      return t;
    }();
    std::size_t idx = 0, scale = 1;
    for (std::size_t i = 0; i < K; ++i) {
      if (args[i] >= kWeightArg<K>) return {0, false};
      idx += static_cast<std::size_t>(args[i]) * scale;
      scale *= kWeightArg<K>;
    }
    return table[idx];
  }

  static Small acd(long k1, long k2) {
    return cached<2>({k1, k2}, [](const auto& a) { return acd_weight(a[0], a[1]); });
  }
  static Small bcd_acg(long k1, long k2, long k3) {
    return cached<3>({k1, k2, k3},
                     [](const auto& a) { return bcd_acg_weight(a[0], a[1], a[2]); });
  }
  static Small chain(long k1, long k2, long k3) {
    return cached<3>({k1, k2, k3}, [](const auto& a) { return chain_weight(a[0], a[1], a[2]); });
  }
  static Small chain_bc(long k1, long k2, long k3, long k4) {
    return cached<4>({k1, k2, k3, k4},
                     [](const auto& a) { return chain_bc_weight(a[0], a[1], a[2], a[3]); });
  }
};

struct BigOps {
  using N = mpz_class;
  static mpz_class binom(long n, long k) { return binomial(n, k); }
  static mpz_class fact(long n) { return factorial(n); }
  static mpz_class acd(long k1, long k2) { return acd_weight(k1, k2); }
  static mpz_class bcd_acg(long k1, long k2, long k3) { return bcd_acg_weight(k1, k2, k3); }
  static mpz_class chain(long k1, long k2, long k3) { return chain_weight(k1, k2, k3); }
  static mpz_class chain_bc(long k1, long k2, long k3, long k4) {
    return chain_bc_weight(k1, k2, k3, k4);
  }
};

// Collects signed structure constants keyed by exponent vector.
template <class N>
class Accumulator {
 public:
  using Key = std::array<Monomial::Exponent, 5>;

  explicit Accumulator(std::size_t dim) : dim_(dim) {}

  void add(std::initializer_list<long> exps, const N& coeff, long sign_parity) {
    Entry e;
    std::size_t i = 0;
    for (long x : exps) {
      if (x < 0) throw std::logic_error("negative exponent in closed-form term");
      e.key[i++] = static_cast<Monomial::Exponent>(x);
      e.degree += static_cast<std::uint64_t>(x);
    }
    e.coeff = coeff;
    e.negative = sign_parity % 2 != 0;
    if constexpr (std::is_same_v<N, Small>) {
      if (!coeff.ok) overflow_ = true;
    }
    entries_.push_back(std::move(e));
  }

  bool overflowed() const { return overflow_; }

  // Sorted, merged and converted; nullopt if a 64-bit sum overflowed.
  std::optional<Polynomial> finish() {
    if (overflow_) return std::nullopt;
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
      return a.degree != b.degree ? a.degree < b.degree : a.key < b.key;
    });
    std::vector<std::pair<Monomial, Rational>> terms;
    terms.reserve(entries_.size());
    for (std::size_t i = 0; i < entries_.size();) {
      N sum = signed_value(entries_[i]);
      std::size_t j = i + 1;
      for (; j < entries_.size() && entries_[j].key == entries_[i].key; ++j) {
        if constexpr (std::is_same_v<N, Small>) {
          if (__builtin_add_overflow(sum.v, signed_value(entries_[j]).v, &sum.v)) {
            return std::nullopt;
          }
        } else {
          sum += signed_value(entries_[j]);
        }
      }
      terms.emplace_back(Monomial(std::vector<Monomial::Exponent>(
                             entries_[i].key.begin(),
                             entries_[i].key.begin() + static_cast<std::ptrdiff_t>(dim_))),
                         to_rational(sum));
      i = j;
    }
    return Polynomial::from_sorted_terms(dim_, std::move(terms));
  }

 private:
  struct Entry {
    Key key{};
    std::uint64_t degree = 0;
    N coeff{};
    bool negative = false;
  };

  static N signed_value(const Entry& e) {
    if constexpr (std::is_same_v<N, Small>) {
      // |v| < 2^63, so negation cannot overflow.
      return {e.negative ? -e.coeff.v : e.coeff.v, true};
    } else {
      return e.negative ? N(-e.coeff) : e.coeff;
    }
  }

  static Rational to_rational(const N& n) {
    if constexpr (std::is_same_v<N, Small>) {
      return Rational(static_cast<long>(n.v));
    } else {
      return Rational(n);
    }
  }

  std::size_t dim_;
  std::vector<Entry> entries_;
  bool overflow_ = false;
};

// In every branch below, lN / rN is the exponent of xN in the left / right factor.

template <class O>
void product_n3_1(const Monomial& L, const Monomial& R, Accumulator<typename O::N>& acc) {
  const long l1 = L[0], l2 = L[1], l3 = L[2];
  const long r1 = R[0], r2 = R[1], r3 = R[2];
  for (long a = 0; a <= std::min(l3, r2); ++a) {
    acc.add({l1 + r1 + a, l2 + r2 - a, l3 + r3 - a},
            O::binom(l3, a) * O::binom(r2, a) * O::fact(a), a);
  }
}

template <class O>
void product_n4_1(const Monomial& L, const Monomial& R, Accumulator<typename O::N>& acc) {
  const long l1 = L[0], l2 = L[1], l3 = L[2], l4 = L[3];
  const long r1 = R[0], r2 = R[1], r3 = R[2], r4 = R[3];
  for (long a = 0; a <= std::min(l4, r2); ++a) {
    const long rem = l4 - a;
    for (long b1 = 0; b1 <= r3 && b1 <= rem; ++b1) {
      for (long b2 = 0; b1 + b2 <= r3 && b1 + 2 * b2 <= rem; ++b2) {
        const typename O::N c = O::binom(l4, a) * O::binom(r2, a) * O::binom(r3, b1 + b2) *
                       O::binom(rem, b1 + 2 * b2) * O::binom(b1 + b2, b1) * O::fact(a) *
                       O::acd(b1, b2);
        acc.add({l1 + r1 + a + b2, l2 + r2 - a + b1, l3 + r3 - b1 - b2, l4 + r4 - a - b1 - 2 * b2},
                c, a + b1);
      }
    }
  }
}

template <class O>
void product_n5_1(const Monomial& L, const Monomial& R, Accumulator<typename O::N>& acc) {
  const long l1 = L[0], l2 = L[1], l3 = L[2], l4 = L[3], l5 = L[4];
  const long r1 = R[0], r2 = R[1], r3 = R[2], r4 = R[3], r5 = R[4];
  for (long a = 0; a <= std::min(l5, r3); ++a) {
    for (long b = 0; b <= std::min(l5 - a, r4); ++b) {
      const typename O::N c = O::binom(l5, a) * O::binom(r3, a) * O::binom(l5 - a, b) * O::binom(r4, b) *
                     O::fact(a) * O::fact(b);
      acc.add({l1 + r1 + a, l2 + r2 + b, l3 + r3 - a, l4 + r4 - b, l5 + r5 - a - b}, c, a + b);
    }
  }
}

template <class O>
void product_n5_2(const Monomial& L, const Monomial& R, Accumulator<typename O::N>& acc) {
  const long l1 = L[0], l2 = L[1], l3 = L[2], l4 = L[3], l5 = L[4];
  const long r1 = R[0], r2 = R[1], r3 = R[2], r4 = R[3], r5 = R[4];
  for (long a = 0; a <= std::min(l5, r3); ++a) {
    const long rem = l5 - a;
    for (long b1 = 0; b1 <= r4 && b1 <= rem; ++b1) {
      for (long b2 = 0; b1 + 2 * b2 <= r4 && b1 + b2 <= rem; ++b2) {
        for (long b3 = 0; b1 + 2 * b2 + b3 <= r4 && b1 + b2 + 2 * b3 <= rem; ++b3) {
          const long used4 = b1 + 2 * b2 + b3;  // from x4^s
          const long used5 = b1 + b2 + 2 * b3;  // from x5^(n-alpha)
          const long x3_avail = r3 - a + b1;
          for (long g = 0; g <= std::min(l4, x3_avail); ++g) {
            const typename O::N c = O::binom(l5, a) * O::binom(r3, a) * O::binom(r4, used4) *
                           O::binom(rem, used5) * O::binom(l4, g) * O::binom(x3_avail, g) *
                           O::bcd_acg(b1, b2, b3) * O::fact(a) * O::fact(g);
            acc.add({l1 + r1 + a + b3, l2 + r2 + b2 + g, l3 + r3 - a + b1 - g,
                     l4 + r4 - g - used4, l5 + r5 - a - used5},
                    c, a + b1 + g);
          }
        }
      }
    }
  }
}

template <class O>
void product_n5_3(const Monomial& L, const Monomial& R, Accumulator<typename O::N>& acc) {
  const long l1 = L[0], l2 = L[1], l3 = L[2], l4 = L[3], l5 = L[4];
  const long r1 = R[0], r2 = R[1], r3 = R[2], r4 = R[3], r5 = R[4];
  for (long a = 0; a <= std::min(l5, r3); ++a) {
    for (long b = 0; b <= std::min(l4, r2); ++b) {
      const typename O::N c = O::binom(l5, a) * O::binom(r3, a) * O::binom(l4, b) * O::binom(r2, b) *
                     O::fact(a) * O::fact(b);
      acc.add({l1 + r1 + a + b, l2 + r2 - b, l3 + r3 - a, l4 + r4 - b, l5 + r5 - a}, c, a + b);
    }
  }
}

template <class O>
void product_n5_4(const Monomial& L, const Monomial& R, Accumulator<typename O::N>& acc) {
  const long l1 = L[0], l2 = L[1], l3 = L[2], l4 = L[3], l5 = L[4];
  const long r1 = R[0], r2 = R[1], r3 = R[2], r4 = R[3], r5 = R[4];
  for (long a = 0; a <= std::min(l5, r2); ++a) {
    const long rem = l5 - a;
    for (long b1 = 0; b1 <= r4 && b1 <= rem; ++b1) {
      for (long b2 = 0; b1 + b2 <= r4 && b1 + 2 * b2 <= rem; ++b2) {
        for (long g = 0; g <= std::min(l4, r3); ++g) {
          const typename O::N c = O::binom(l5, a) * O::binom(r2, a) * O::binom(r4, b1 + b2) *
                         O::binom(rem, b1 + 2 * b2) * O::binom(b1 + b2, b1) * O::binom(l4, g) *
                         O::binom(r3, g) * O::fact(a) * O::acd(b1, b2) * O::fact(g);
          acc.add({l1 + r1 + a + b2 + g, l2 + r2 - a + b1, l3 + r3 - g, l4 + r4 - g - b1 - b2,
                   l5 + r5 - a - b1 - 2 * b2},
                  c, a + b1 + g);
        }
      }
    }
  }
}

template <class O>
void product_n5_5(const Monomial& L, const Monomial& R, Accumulator<typename O::N>& acc) {
  const long l1 = L[0], l2 = L[1], l3 = L[2], l4 = L[3], l5 = L[4];
  const long r1 = R[0], r2 = R[1], r3 = R[2], r4 = R[3], r5 = R[4];
  for (long a = 0; a <= std::min(l5, r2); ++a) {
    for (long b1 = 0; b1 <= r3 && b1 <= l5 - a; ++b1) {
      for (long b2 = 0; b1 + b2 <= r3 && b1 + 2 * b2 <= l5 - a; ++b2) {
        const long rem = l5 - a - b1 - 2 * b2;
        const typename O::N outer = O::binom(l5, a) * O::binom(r2, a) * O::binom(r3, b1 + b2) *
                           O::binom(l5 - a, b1 + 2 * b2) * O::binom(b1 + b2, b1) * O::fact(a) *
                           O::acd(b1, b2);
        for (long g1 = 0; g1 <= r4 && g1 <= rem; ++g1) {
          for (long g2 = 0; g1 + g2 <= r4 && g1 + 2 * g2 <= rem; ++g2) {
            for (long g3 = 0; g1 + g2 + g3 <= r4 && g1 + 2 * g2 + 3 * g3 <= rem; ++g3) {
              const long used4 = g1 + g2 + g3;
              const long used5 = g1 + 2 * g2 + 3 * g3;
              const typename O::N c =
                  outer * O::binom(r4, used4) * O::binom(rem, used5) * O::chain(g1, g2, g3);
              acc.add({l1 + r1 + a + b2 + g3, l2 + r2 - a + b1 + g2, l3 + r3 - b1 - b2 + g1,
                       l4 + r4 - used4, l5 + r5 - a - b1 - 2 * b2 - used5},
                      c, a + b1 + g1 + g3);
            }
          }
        }
      }
    }
  }
}

template <class O>
void product_n5_6(const Monomial& L, const Monomial& R, Accumulator<typename O::N>& acc) {
  const long l1 = L[0], l2 = L[1], l3 = L[2], l4 = L[3], l5 = L[4];
  const long r1 = R[0], r2 = R[1], r3 = R[2], r4 = R[3], r5 = R[4];
  for (long a = 0; a <= std::min(l5, r2); ++a) {
    for (long b1 = 0; b1 <= r3 && b1 <= l5 - a; ++b1) {
      for (long b2 = 0; b1 + b2 <= r3 && b1 + 2 * b2 <= l5 - a; ++b2) {
        const long rem = l5 - a - b1 - 2 * b2;
        const typename O::N outer = O::binom(l5, a) * O::binom(r2, a) * O::binom(r3, b1 + b2) *
                           O::binom(l5 - a, b1 + 2 * b2) * O::binom(b1 + b2, b1) * O::fact(a) *
                           O::acd(b1, b2);
        for (long g1 = 0; g1 <= r4 && g1 <= rem; ++g1) {
          for (long g2 = 0; g1 + g2 <= r4 && g1 + 2 * g2 <= rem; ++g2) {
            for (long g3 = 0; g1 + g2 + g3 <= r4 && g1 + 2 * g2 + 3 * g3 <= rem; ++g3) {
              for (long g4 = 0; g1 + g2 + g3 + 2 * g4 <= r4 && g1 + 2 * g2 + 3 * g3 + g4 <= rem;
                   ++g4) {
                const long used4 = g1 + g2 + g3 + 2 * g4;
                const long used5 = g1 + 2 * g2 + 3 * g3 + g4;
                const long x3_avail = r3 - b1 - b2 + g1;
                const typename O::N inner = outer * O::binom(r4, used4) * O::binom(rem, used5) *
                                   O::chain_bc(g1, g2, g3, g4);
                for (long d = 0; d <= std::min(l4, x3_avail); ++d) {
                  const typename O::N c = inner * O::binom(l4, d) * O::binom(x3_avail, d) * O::fact(d);
                  acc.add({l1 + r1 + a + b2 + g4 + g3 + d, l2 + r2 - a + b1 + g2,
                           l3 + r3 - b1 - b2 + g1 - d, l4 + r4 - d - used4,
                           l5 + r5 - a - b1 - 2 * b2 - used5},
                          c, a + b1 + g1 + g3 + d);
                }
              }
            }
          }
        }
      }
    }
  }
}

template <class O>
std::optional<Polynomial> run(AlgebraId id, const Monomial& left, const Monomial& right) {
  Accumulator<typename O::N> acc(static_cast<std::size_t>(dimension(id)));
  switch (id) {
    case AlgebraId::n3_1: product_n3_1<O>(left, right, acc); break;
    case AlgebraId::n4_1: product_n4_1<O>(left, right, acc); break;
    case AlgebraId::n5_1: product_n5_1<O>(left, right, acc); break;
    case AlgebraId::n5_2: product_n5_2<O>(left, right, acc); break;
    case AlgebraId::n5_3: product_n5_3<O>(left, right, acc); break;
    case AlgebraId::n5_4: product_n5_4<O>(left, right, acc); break;
    case AlgebraId::n5_5: product_n5_5<O>(left, right, acc); break;
    case AlgebraId::n5_6: product_n5_6<O>(left, right, acc); break;
  }
  return acc.finish();
}

Polynomial dispatch(AlgebraId id, const Monomial& left, const Monomial& right) {
  if (auto fast = run<SmallOps>(id, left, right)) return std::move(*fast);
  return *run<BigOps>(id, left, right);
}

// Powers of generators in written order, e.g. x5^2 x3 x5.
using BlockWord = std::vector<std::pair<int, unsigned>>;

void normalize(BlockWord& w) {
  BlockWord out;
  out.reserve(w.size());
  for (const auto& blk : w) {
    if (blk.second == 0) continue;
    if (!out.empty() && out.back().first == blk.first) {
      out.back().second += blk.second;
    } else {
      out.push_back(blk);
    }
  }
  w = std::move(out);
}

void verify(AlgebraId id, const Monomial& left, const Monomial& right, const Polynomial& closed) {
  const Polynomial composed = product_by_composition(builtin(id), left, right);
  if (composed != closed) {
    throw EngineMismatch("closed form and lemma composition disagree in " +
                         std::string(to_string(id)) + " on " + left.to_string() + " * " +
                         right.to_string() + ": " + closed.to_string() + " vs " +
                         composed.to_string());
  }
}

}  // namespace

Polynomial product(AlgebraId id, const Monomial& left, const Monomial& right) {
  const auto dim = static_cast<std::size_t>(dimension(id));
  if (left.dim() != dim || right.dim() != dim) {
    throw DimensionMismatch("monomials must have dimension " + std::to_string(dim) + " for " +
                            std::string(to_string(id)));
  }
  Polynomial out = dispatch(id, left, right);
  if constexpr (kVerifyComposition) verify(id, left, right, out);
  return out;
}

Polynomial product(AlgebraId id, const Polynomial& left, const Polynomial& right) {
  const auto dim = static_cast<std::size_t>(dimension(id));
  if (left.dim() != dim || right.dim() != dim) {
    throw DimensionMismatch("polynomials must have dimension " + std::to_string(dim) + " for " +
                            std::string(to_string(id)));
  }
  Polynomial out(dim);
  for (const auto& [ml, cl] : left.terms()) {
    for (const auto& [mr, cr] : right.terms()) out += poly_scale(cl * cr, product(id, ml, mr));
  }
  return out;
}

Polynomial product_checked(AlgebraId id, const Monomial& left, const Monomial& right) {
  Polynomial out = product(id, left, right);
  if constexpr (!kVerifyComposition) verify(id, left, right, out);
  return out;
}

Polynomial product_by_composition(const LieAlgebraSpec& spec, const Monomial& left,
                                  const Monomial& right, CompositionTrace* trace) {
  const auto dim = static_cast<std::size_t>(spec.dim());
  if (left.dim() != dim || right.dim() != dim) {
    throw DimensionMismatch("monomial dimension does not match " + spec.name());
  }
  if (!spec.well_formed()) throw Error("spec '" + spec.name() + "' is malformed");

  std::map<std::pair<int, int>, std::optional<std::pair<LemmaKind, RoleBinding>>> matches;
  auto lemma_for = [&](int a, int b) -> const std::pair<LemmaKind, RoleBinding>& {
    auto it = matches.find({a, b});
    if (it == matches.end()) {
      it = matches.emplace(std::pair{a, b}, match_lemma(spec, GeneratorIndex{a}, GeneratorIndex{b}))
               .first;
    }
    if (!it->second) {
      throw HypothesisMismatch("no straightening lemma applies to [x" + std::to_string(a) + ",x" +
                               std::to_string(b) + "] in " + spec.name());
    }
    return *it->second;
  };

  BlockWord start;
  for (std::size_t i = 0; i < dim; ++i) start.emplace_back(static_cast<int>(i + 1), left[i]);
  for (std::size_t i = 0; i < dim; ++i) start.emplace_back(static_cast<int>(i + 1), right[i]);

  std::vector<std::pair<BlockWord, Rational>> stack;
  stack.emplace_back(std::move(start), Rational(1));
  Polynomial result(dim);
  constexpr std::size_t kStepLimit = 50'000'000;
  std::size_t steps = 0;

  while (!stack.empty()) {
    if (++steps > kStepLimit) throw Error("lemma composition did not terminate");
    auto [w, coeff] = std::move(stack.back());
    stack.pop_back();
    normalize(w);

    std::size_t p = 0;
    while (p + 1 < w.size() && w[p].first < w[p + 1].first) ++p;
    if (p + 1 >= w.size()) {
      Monomial m(dim);
      for (const auto& [g, e] : w) m[static_cast<std::size_t>(g - 1)] += e;
      result.add_term(m, coeff);
      continue;
    }

    const auto [ga, t] = w[p];
    const auto [gb, u] = w[p + 1];
    if (spec.bracket_terms(ga, gb).empty()) {
      std::swap(w[p], w[p + 1]);
      stack.emplace_back(std::move(w), coeff);
      continue;
    }

    const auto& [kind, binding] = lemma_for(ga, gb);
    if (trace) ++(*trace)[kind];
    const Polynomial straightened = apply_roles(binding, lemma_terms(kind, t, u));
    for (const auto& [m, c] : straightened.terms()) {
      BlockWord next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
      for (std::size_t i = 0; i < dim; ++i) {
        if (m[i] != 0) next.emplace_back(static_cast<int>(i + 1), m[i]);
      }
      next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(p + 2), w.end());
      stack.emplace_back(std::move(next), coeff * c);
    }
  }
  return result;
}

}  // namespace uea

#pragma once

#include <gmpxx.h>

namespace uea {

// C(n, k); zero when k > n.
mpz_class binomial(unsigned long n, unsigned long k);
mpz_class factorial(unsigned long n);
mpz_class power(unsigned long base, unsigned long exp);

// num / den where den is required to divide num; throws std::logic_error otherwise.
mpz_class exact_quotient(const mpz_class& num, const mpz_class& den);

}  // namespace uea

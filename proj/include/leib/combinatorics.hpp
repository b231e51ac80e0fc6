#pragma once

#include <gmpxx.h>

#include "leib/rational.hpp"

namespace leib {

/// n!. Memoized per thread; the cache only grows.
mpz_class factorial(unsigned n);

/// C(n, k), with the convention C(n, k) = 0 for k < 0 or k > n.
mpz_class binomial(unsigned n, long k);

/// Beta function at positive integer arguments:
/// B(p, q) = (p-1)!(q-1)!/(p+q-1)!. Throws std::domain_error at the p = 0
/// or q = 0 pole.
Rational beta_int(unsigned p, unsigned q);

}  // namespace leib

#include "leib/combinatorics.hpp"

#include <stdexcept>
#include <vector>

namespace leib {

mpz_class factorial(unsigned n) {
  // Thread-local so lookups need no locking; fills are idempotent.
  thread_local std::vector<mpz_class> cache{mpz_class(1)};
  while (cache.size() <= n) {
    cache.push_back(cache.back() * static_cast<unsigned long>(cache.size()));
  }
  return cache[n];
}

mpz_class binomial(unsigned n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
  thread_local std::vector<std::vector<mpz_class>> rows{{mpz_class(1)}};
  while (rows.size() <= n) {
    const auto& prev = rows.back();
    std::vector<mpz_class> row(rows.size() + 1, mpz_class(1));
    for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
    rows.push_back(std::move(row));
  }
  return rows[n][static_cast<std::size_t>(k)];
}

Rational beta_int(unsigned p, unsigned q) {
  if (p == 0 || q == 0)
    throw std::domain_error("beta_int: pole at nonpositive integer argument");
  return Rational(factorial(p - 1) * factorial(q - 1), factorial(p + q - 1));
}

}  // namespace leib

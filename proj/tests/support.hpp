#pragma once

#include <random>
#include <vector>

#include "leib/combinatorics.hpp"
#include "leib/rational.hpp"
#include "leib/unipoly.hpp"

namespace test_support {

inline leib::Rational rat(long num, long den = 1) { return leib::Rational(num, den); }

/// Independent Bernoulli oracle: B_0 = 1, sum_{k=0..n} C(n+1,k) B_k = 0
/// (first-kind convention, B_1 = -1/2). Never touches the Volkenborn path.
inline std::vector<leib::Rational> bernoulli_recurrence(unsigned n_max) {
  std::vector<leib::Rational> b{leib::Rational(1)};
  for (unsigned n = 1; n <= n_max; ++n) {
    leib::Rational acc(0);
    for (unsigned k = 0; k < n; ++k)
      acc += leib::Rational(leib::binomial(n + 1, static_cast<long>(k))) * b[k];
    b.push_back(-acc / leib::Rational(static_cast<long>(n) + 1));
  }
  return b;
}

struct RandomRationals {
  std::mt19937 rng;
  std::uniform_int_distribution<long> num{-30, 30};
  std::uniform_int_distribution<long> den{1, 12};

  explicit RandomRationals(unsigned seed) : rng(seed) {}

  leib::Rational next() { return leib::Rational(num(rng), den(rng)); }

  leib::UniPoly next_poly(unsigned max_degree) {
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    unsigned d = deg(rng);
    std::vector<leib::Rational> coeffs;
    for (unsigned i = 0; i <= d; ++i) coeffs.push_back(next());
    return leib::UniPoly(std::move(coeffs));
  }
};

}  // namespace test_support

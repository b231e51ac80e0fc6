#include <doctest.h>

#include <stdexcept>

#include "leib/combinatorics.hpp"
#include "support.hpp"

using leib::beta_int;
using leib::binomial;
using leib::factorial;
using leib::Rational;

TEST_CASE("binomial values and out-of-range convention") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(0, 0) == 1);
}

TEST_CASE("binomial satisfies Pascal's rule up to n = 60") {
  for (unsigned n = 1; n <= 60; ++n)
    for (unsigned k = 1; k < n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(4) == 24);
  CHECK(factorial(6) == 720);
  CHECK(factorial(20) == mpz_class("2432902008176640000"));
  // past 64 bits
  CHECK(factorial(25) == mpz_class("15511210043330985984000000"));
}

TEST_CASE("beta at integer arguments") {
  CHECK(beta_int(1, 1) == Rational(1));
  CHECK(beta_int(2, 3) == Rational(1, 12));
  CHECK(beta_int(2, 3) == Rational(factorial(1) * factorial(2), factorial(4)));
  // B(k+1, n-k+1) = 1/((n+1) C(n,k)) at (n,k) = (4,2)
  CHECK(beta_int(3, 3) == Rational(1, 30));
  CHECK(beta_int(3, 3) == Rational(mpz_class(1), mpz_class(5) * binomial(4, 2)));
  CHECK_THROWS_AS(beta_int(0, 1), std::domain_error);
  CHECK_THROWS_AS(beta_int(1, 0), std::domain_error);
}

TEST_CASE("beta symmetry up to 30") {
  for (unsigned p = 1; p <= 30; ++p)
    for (unsigned q = p; q <= 30; ++q) CHECK(beta_int(p, q) == beta_int(q, p));
}

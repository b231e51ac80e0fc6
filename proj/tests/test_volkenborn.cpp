#include <doctest.h>

#include "leib/special_numbers.hpp"
#include "leib/volkenborn.hpp"
#include "support.hpp"

using namespace leib;
using test_support::rat;

TEST_CASE("Mahler coefficients by forward differences") {
  CHECK(mahler_coefficients(UniPoly::constant(rat(1))).coefficients ==
        std::vector<Rational>{rat(1)});
  CHECK(mahler_coefficients(UniPoly::monomial(1)).coefficients ==
        std::vector<Rational>{rat(0), rat(1)});
  CHECK(mahler_coefficients(UniPoly::monomial(2)).coefficients ==
        std::vector<Rational>{rat(0), rat(1), rat(2)});
  CHECK(mahler_coefficients(UniPoly()).coefficients == std::vector<Rational>{rat(0)});
}

TEST_CASE("Mahler expansion reconstructs the polynomial exactly") {
  test_support::RandomRationals gen(31337);
  for (int i = 0; i < 60; ++i) {
    UniPoly p = gen.next_poly(15);
    CHECK(mahler_reconstruct(mahler_coefficients(p)) == p);
  }
}

TEST_CASE("top Mahler coefficient is d! times the leading coefficient") {
  test_support::RandomRationals gen(8080);
  for (int i = 0; i < 40; ++i) {
    UniPoly p = gen.next_poly(12);
    if (p.is_zero()) continue;
    auto m = mahler_coefficients(p);
    unsigned d = static_cast<unsigned>(p.degree());
    CHECK(m.coefficients.back() ==
          Rational(factorial(d)) * p.coeff(d));
  }
}

TEST_CASE("integral values on small polynomials") {
  CHECK(volkenborn_integral_poly(UniPoly::constant(rat(1))) == rat(1));
  CHECK(volkenborn_integral_poly(UniPoly::monomial(1)) == rat(-1, 2));
  CHECK(volkenborn_integral_poly(UniPoly::monomial(2)) == rat(1, 6));
}

TEST_CASE("integral of x^n is the n-th Bernoulli number, n <= 20") {
  auto bernoulli = test_support::bernoulli_recurrence(20);
  CHECK(bernoulli[1] == rat(-1, 2));
  CHECK(bernoulli[2] == rat(1, 6));
  CHECK(bernoulli[3] == rat(0));
  CHECK(bernoulli[12] == rat(-691, 2730));
  for (unsigned n = 0; n <= 20; ++n)
    CHECK(volkenborn_integral_poly(UniPoly::monomial(n)) == bernoulli[n]);
}

TEST_CASE("shift identity") {
  CHECK(volkenborn_shift_check(UniPoly::constant(rat(1))));
  CHECK(volkenborn_shift_check(UniPoly::monomial(2)));
  CHECK(volkenborn_shift_check(UniPoly({rat(0), rat(-1), rat(0), rat(1)})));  // x^3 - x
  for (unsigned d = 0; d <= 15; ++d) CHECK(volkenborn_shift_check(UniPoly::monomial(d)));
  test_support::RandomRationals gen(60606);
  for (int i = 0; i < 100; ++i) CHECK(volkenborn_shift_check(gen.next_poly(15)));
}

TEST_CASE("falling-factorial product integral") {
  CHECK(volkenborn_falling_product(0, 0) == rat(1));
  CHECK(volkenborn_falling_product(1, 0) == rat(-1, 2));
  CHECK(volkenborn_falling_product(1, 1) == rat(1, 6));
  CHECK(volkenborn_falling_product(2, 1) == rat(-1, 6));
  for (unsigned n = 0; n <= 10; ++n)
    for (unsigned m = 0; m <= 10; ++m) {
      CHECK(volkenborn_falling_product(n, m) ==
            volkenborn_integral_poly(falling_factorial_poly(n) * falling_factorial_poly(m)));
      CHECK(volkenborn_falling_product(n, m) == volkenborn_falling_product(m, n));
    }
}

TEST_CASE("row polynomials out of the product integrals") {
  CHECK(theorem_a11_polynomial(0) == UniPoly::constant(rat(1)));
  CHECK(theorem_a11_polynomial(1) == UniPoly({rat(1, 2), rat(1, 2)}));
  CHECK(theorem_ki1_polynomial(0) == UniPoly::constant(rat(1)));
  CHECK(theorem_ki1_polynomial(1) == UniPoly({rat(1, 2), rat(1, 2)}));
  for (unsigned n = 0; n <= 20; ++n) {
    UniPoly expected = leibnitz_polynomial(n);
    CHECK(theorem_a11_polynomial(n) == expected);
    CHECK(theorem_ki1_polynomial(n) == expected);
  }
}

TEST_CASE("row sums out of the double sum") {
  CHECK(corollary_ki2_sum(0) == rat(1));
  CHECK(corollary_ki2_sum(1) == rat(1));
  CHECK(corollary_ki2_sum(2) == rat(5, 6));
  for (unsigned n = 0; n <= 20; ++n) CHECK(corollary_ki2_sum(n) == leibnitz_row_sum(n));
}

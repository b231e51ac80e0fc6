#include <doctest.h>

#include <stdexcept>

#include "leib/special_numbers.hpp"
#include "support.hpp"

using namespace leib;
using test_support::rat;

TEST_CASE("closed form values") {
  CHECK(leibnitz(0, 0) == rat(1));
  CHECK(leibnitz(4, 2) == rat(1, 30));
  CHECK(leibnitz(2, 1) == rat(1, 6));
  CHECK_THROWS_AS(leibnitz(3, 4), std::domain_error);
}

TEST_CASE("sum form values") {
  CHECK(leibnitz_sum_form(2, 1) == rat(1, 6));  // -1/3 + 1/2
  CHECK(leibnitz_sum_form(5, 0) == rat(1, 6));
  CHECK(leibnitz_sum_form(3, 3) == rat(1, 4));
  CHECK_THROWS_AS(leibnitz_sum_form(3, 4), std::domain_error);
}

TEST_CASE("recurrence triangle") {
  LeibnitzTriangle tri = leibnitz_triangle(2);
  CHECK(tri.rows.size() == 3);
  CHECK(tri.at(0, 0) == rat(1));
  CHECK(tri.at(1, 0) == rat(1, 2));
  CHECK(tri.at(1, 1) == rat(1, 2));
  CHECK(tri.at(2, 1) == rat(1, 6));
}

TEST_CASE("triple-oracle agreement to depth 40") {
  CHECK(!cross_check_triangle(40).has_value());
}

TEST_CASE("triangle rows are positive, symmetric, and edge 1/(n+1)") {
  LeibnitzTriangle tri = leibnitz_triangle(30);
  for (unsigned n = 0; n <= 30; ++n) {
    CHECK(tri.at(n, 0) == Rational(1, static_cast<long>(n) + 1));
    for (unsigned k = 0; k <= n; ++k) {
      CHECK(tri.at(n, k).sign() > 0);
      CHECK(tri.at(n, k) == tri.at(n, n - k));
    }
  }
}

TEST_CASE("row symmetry l(n,k) = l(n,n-k)") {
  for (unsigned n = 0; n <= 40; ++n)
    for (unsigned k = 0; k <= n; ++k) CHECK(leibnitz(n, k) == leibnitz(n, n - k));
}

TEST_CASE("harmonic-triangle descent l(n,k) = l(n+1,k) + l(n+1,k+1)") {
  for (unsigned n = 0; n <= 39; ++n)
    for (unsigned k = 0; k <= n; ++k)
      CHECK(leibnitz(n, k) == leibnitz(n + 1, k) + leibnitz(n + 1, k + 1));
}

TEST_CASE("1/l(n,1) is the pronic number n(n+1)") {
  for (unsigned n = 1; n <= 40; ++n) {
    Rational v = leibnitz(n, 1);
    CHECK(v.num() == 1);
    CHECK(v.den() == mpz_class(n) * mpz_class(n + 1));
  }
}

TEST_CASE("row polynomials") {
  CHECK(leibnitz_polynomial(0) == UniPoly::constant(rat(1)));
  CHECK(leibnitz_polynomial(1) == UniPoly({rat(1, 2), rat(1, 2)}));
  CHECK(leibnitz_polynomial(2).eval(rat(1)) == rat(5, 6));
  CHECK(leibnitz_polynomial(7).eval(rat(0)) == rat(1, 8));
  CHECK(leibnitz_polynomial(9).eval(rat(1)) == leibnitz_row_sum(9));
}

TEST_CASE("row-sum recurrence L_n(1) - (1/2) L_(n-1)(1) = 1/(n+1)") {
  for (unsigned n = 1; n <= 40; ++n)
    CHECK(leibnitz_row_sum(n) - rat(1, 2) * leibnitz_row_sum(n - 1) ==
          Rational(1, static_cast<long>(n) + 1));
}

TEST_CASE("Daehee numbers") {
  CHECK(daehee(0) == rat(1));
  CHECK(daehee(1) == rat(-1, 2));
  CHECK(daehee(4) == rat(24, 5));
}

TEST_CASE("Changhee numbers") {
  CHECK(changhee(0) == rat(1));
  CHECK(changhee(2) == rat(1, 2));
  CHECK(changhee(3) == rat(-3, 4));
}

TEST_CASE("Y numbers") {
  CHECK(y_number(0, rat(3)) == rat(1));
  CHECK(y_number(2, rat(-1)) == rat(-1, 2));
  CHECK(y_number(1, rat(2)) == rat(-8));
  // Y_n(-1) = -n!/2^n
  for (unsigned n = 0; n <= 12; ++n) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, n);
    CHECK(y_number(n, rat(-1)) == -Rational(factorial(n), den));
  }
  CHECK_THROWS_AS(y_number(2, rat(1)), std::domain_error);
  CHECK_THROWS_AS(y_number(2, rat(2, 2)), std::domain_error);
}

TEST_CASE("Changhee via Y at lambda = -1") {
  CHECK(changhee_from_y(0) == rat(1));
  CHECK(changhee_from_y(2) == rat(1, 2));
  CHECK(changhee_from_y(5) == rat(-15, 4));
  for (unsigned n = 0; n <= 40; ++n) CHECK(changhee_from_y(n) == changhee(n));
}

TEST_CASE("number family dispatch") {
  CHECK(number_family_value(NumberFamily::daehee, 4).value == rat(24, 5));
  CHECK(number_family_value(NumberFamily::changhee, 3).value == rat(-3, 4));
  NumberFamilyValue y = number_family_value(NumberFamily::y, 1, rat(2));
  CHECK(y.value == rat(-8));
  CHECK(y.parameter == rat(2));
  CHECK_THROWS_AS(number_family_value(NumberFamily::y, 1), std::invalid_argument);
}

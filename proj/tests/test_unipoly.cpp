#include <doctest.h>

#include <stdexcept>

#include "leib/unipoly.hpp"
#include "support.hpp"

using leib::falling_factorial_poly;
using leib::Rational;
using leib::UniPoly;
using test_support::rat;
using test_support::RandomRationals;

TEST_CASE("normalization strips trailing zeros") {
  CHECK(UniPoly({rat(1), rat(2), rat(0)}).degree() == 1);
  CHECK(UniPoly({rat(0)}).is_zero());
  CHECK(UniPoly().degree() == -1);
  // x^2 - x plus x is x^2
  UniPoly p({rat(0), rat(-1), rat(1)});
  UniPoly q = p + UniPoly::monomial(1);
  CHECK(q == UniPoly::monomial(2));
}

TEST_CASE("falling factorial polynomials") {
  CHECK(falling_factorial_poly(0) == UniPoly::constant(rat(1)));
  CHECK(falling_factorial_poly(2) == UniPoly({rat(0), rat(-1), rat(1)}));
  CHECK(falling_factorial_poly(3) == UniPoly({rat(0), rat(2), rat(-3), rat(1)}));
}

TEST_CASE("evaluating the expanded falling factorial matches the product") {
  for (unsigned n = 0; n <= 20; ++n) {
    UniPoly p = falling_factorial_poly(n);
    for (long m = 0; m <= 20; ++m) {
      Rational direct(1);
      for (unsigned i = 0; i < n; ++i) direct *= rat(m - static_cast<long>(i));
      CHECK(p.eval(rat(m)) == direct);
    }
  }
}

TEST_CASE("evaluation, derivative, shift") {
  UniPoly p({rat(0), rat(2), rat(-3), rat(1)});  // x^3 - 3x^2 + 2x
  CHECK(p.eval(rat(3)) == rat(6));
  CHECK(p.derivative() == UniPoly({rat(2), rat(-6), rat(3)}));
  CHECK(UniPoly::monomial(2).shifted_arg(rat(1)) == UniPoly({rat(1), rat(2), rat(1)}));
  CHECK(p.shifted_arg(rat(0)) == p);
  // p(x+c) evaluated at x equals p(x+c)
  RandomRationals gen(777);
  for (int i = 0; i < 50; ++i) {
    UniPoly q = gen.next_poly(8);
    Rational c = gen.next(), x = gen.next();
    CHECK(q.shifted_arg(c).eval(x) == q.eval(x + c));
  }
}

TEST_CASE("exact definite integral") {
  CHECK(UniPoly::constant(rat(1)).definite_integral(rat(0), rat(1)) == rat(1));
  CHECK(UniPoly::monomial(1).definite_integral(rat(0), rat(2)) == rat(2));
  // x - x^2 over [0,1]
  CHECK(UniPoly({rat(0), rat(1), rat(-1)}).definite_integral(rat(0), rat(1)) == rat(1, 6));
}

TEST_CASE("integral is antisymmetric under swapping the endpoints") {
  RandomRationals gen(4242);
  for (int i = 0; i < 60; ++i) {
    UniPoly p = gen.next_poly(10);
    Rational a = gen.next(), b = gen.next();
    CHECK(p.definite_integral(a, b) == -p.definite_integral(b, a));
  }
}

TEST_CASE("exact division by a linear factor") {
  UniPoly p = UniPoly({rat(1), rat(1)}) * UniPoly({rat(1), rat(1)});  // (1+x)^2
  CHECK(p.exact_divide_linear(rat(-1)) == UniPoly({rat(1), rat(1)}));
  CHECK_THROWS_AS(UniPoly::monomial(1).exact_divide_linear(rat(-1)), std::domain_error);
}

TEST_CASE("rendering") {
  CHECK(UniPoly().str() == "0");
  CHECK(UniPoly({rat(1, 2), rat(1, 2)}).str() == "1/2 + 1/2*t");
  CHECK(UniPoly({rat(0), rat(-1), rat(1)}).str("x") == "-x + x^2");
  CHECK(UniPoly({rat(0), rat(2), rat(-3), rat(1)}).str("x") == "2*x - 3*x^2 + x^3");
  CHECK(UniPoly::constant(rat(-5, 3)).str() == "-5/3");
}

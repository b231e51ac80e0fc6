#include <doctest.h>

#include <vector>

#include "leib/series.hpp"
#include "support.hpp"

using namespace leib;
using test_support::rat;

namespace {

bool all_pass(const std::vector<ReportEntry>& entries) {
  for (const auto& e : entries)
    if (!e.pass) return false;
  return !entries.empty();
}

TruncSeries random_series(test_support::RandomRationals& gen, unsigned order,
                          unsigned max_degree) {
  TruncSeries s(order);
  for (unsigned n = 0; n <= order; ++n) s.set_coeff(n, gen.next_poly(max_degree));
  return s;
}

}  // namespace

TEST_CASE("series arithmetic basics") {
  // (1+u)(1-u) = 1 - u^2 at order 2
  TruncSeries one_plus_u(2), one_minus_u(2);
  one_plus_u.set_coeff(0, UniPoly::constant(rat(1)));
  one_plus_u.set_coeff(1, UniPoly::constant(rat(1)));
  one_minus_u.set_coeff(0, UniPoly::constant(rat(1)));
  one_minus_u.set_coeff(1, UniPoly::constant(rat(-1)));
  TruncSeries product = mul(one_plus_u, one_minus_u);
  CHECK(product.coeff(0) == UniPoly::constant(rat(1)));
  CHECK(product.coeff(1).is_zero());
  CHECK(product.coeff(2) == UniPoly::constant(rat(-1)));

  // u -> t*u on sum u^n/n turns coefficients into t^n/n
  TruncSeries s(3);
  for (unsigned n = 1; n <= 3; ++n)
    s.set_coeff(n, UniPoly::constant(Rational(1, static_cast<long>(n))));
  TruncSeries sub = s.substituted_u_times_t();
  for (unsigned n = 1; n <= 3; ++n)
    CHECK(sub.coeff(n) == UniPoly::monomial(n, Rational(1, static_cast<long>(n))));

  // shift 1 by u^1 gives u
  TruncSeries one(2);
  one.set_coeff(0, UniPoly::constant(rat(1)));
  TruncSeries shifted = one.shifted_by_u_power(1);
  CHECK(shifted.coeff(0).is_zero());
  CHECK(shifted.coeff(1) == UniPoly::constant(rat(1)));
}

TEST_CASE("mixed orders zero-extend to the longer one") {
  TruncSeries short_s(1), long_s(3);
  short_s.set_coeff(0, UniPoly::constant(rat(1)));
  short_s.set_coeff(1, UniPoly::constant(rat(2)));
  long_s.set_coeff(2, UniPoly::constant(rat(5)));
  TruncSeries sum = short_s + long_s;
  CHECK(sum.order() == 3);
  CHECK(sum.coeff(1) == UniPoly::constant(rat(2)));
  CHECK(sum.coeff(2) == UniPoly::constant(rat(5)));
  CHECK(sum.coeff(3).is_zero());
  TruncSeries prod = mul(short_s, long_s);
  CHECK(prod.order() == 3);
  CHECK(prod.coeff(2) == UniPoly::constant(rat(5)));
  CHECK(prod.coeff(3) == UniPoly::constant(rat(10)));
}

TEST_CASE("log series") {
  TruncSeries mercator = log_one_minus(2, UniPoly::constant(rat(1)));
  CHECK(mercator.coeff(0).is_zero());
  CHECK(mercator.coeff(1) == UniPoly::constant(rat(-1)));
  CHECK(mercator.coeff(2) == UniPoly::constant(rat(-1, 2)));

  TruncSeries scaled = log_one_minus(3, UniPoly::monomial(1));
  CHECK(scaled.coeff(1) == UniPoly::monomial(1, rat(-1)));
  CHECK(scaled.coeff(2) == UniPoly::monomial(2, rat(-1, 2)));
  CHECK(scaled.coeff(3) == UniPoly::monomial(3, rat(-1, 3)));
}

TEST_CASE("Cauchy product is commutative and associative on sampled series") {
  test_support::RandomRationals gen(2024);
  for (int i = 0; i < 8; ++i) {
    TruncSeries a = random_series(gen, 15, 3);
    TruncSeries b = random_series(gen, 15, 3);
    TruncSeries c = random_series(gen, 15, 3);
    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
  }
}

TEST_CASE("generating-function identity for the row polynomials, order 30") {
  auto entries = check_gf_leibnitz(30);
  CHECK(entries.size() == 31);
  CHECK(all_pass(entries));
}

TEST_CASE("cross-multiplied family generating functions at order 30") {
  CHECK(all_pass(check_gf_daehee(30)));
  CHECK(all_pass(check_gf_changhee(30)));
  for (const Rational& lambda : {rat(-1), rat(2), rat(-3), rat(5, 2)})
    CHECK(all_pass(check_gf_y(30, lambda)));
}

TEST_CASE("functional equations at order 30") {
  CHECK(all_pass(check_functional_eq_fe(30)));
  CHECK(all_pass(check_functional_eq_gl_daehee(30)));
}

TEST_CASE("truncation coherence: lower order is a prefix of higher order") {
  auto high = check_gf_leibnitz(20);
  auto low = check_gf_leibnitz(12);
  for (std::size_t i = 0; i < low.size(); ++i) {
    CHECK(low[i].pass == high[i].pass);
    CHECK(low[i].params == high[i].params);
  }
  // and on raw series arithmetic
  test_support::RandomRationals gen(5151);
  TruncSeries a20 = random_series(gen, 20, 2);
  TruncSeries b20 = random_series(gen, 20, 2);
  TruncSeries full = mul(a20, b20);
  TruncSeries a10(10), b10(10);
  for (unsigned n = 0; n <= 10; ++n) {
    a10.set_coeff(n, a20.coeff(n));
    b10.set_coeff(n, b20.coeff(n));
  }
  TruncSeries part = mul(a10, b10);
  for (unsigned n = 0; n <= 10; ++n) CHECK(part.coeff(n) == full.coeff(n));
}

TEST_CASE("coefficient solver recovers the row polynomials, order 30") {
  std::vector<UniPoly> solved = solve_leibnitz_coefficients(30);
  REQUIRE(solved.size() == 31);
  for (unsigned n = 0; n <= 30; ++n) CHECK(solved[n] == leibnitz_polynomial(n));
}

TEST_CASE("hand-checked low-order coefficients of the cross-multiplied identity") {
  auto entries = check_gf_leibnitz(2);
  CHECK(all_pass(entries));
  // coefficient of u^1 on both sides is -(1+t)
  TruncSeries rhs = log_one_minus(2, UniPoly::constant(rat(1))) +
                    log_one_minus(2, UniPoly::monomial(1));
  CHECK(rhs.coeff(1) == UniPoly({rat(-1), rat(-1)}));
  // coefficient of u^2 is -(1+t^2)/2
  CHECK(rhs.coeff(2) == UniPoly({rat(-1, 2), rat(0), rat(-1, 2)}));

  // Changhee coefficient of u^1: 2*Ch_1/1! + Ch_0 = 0
  CHECK(rat(2) * changhee(1) + changhee(0) == rat(0));
}

#include "leib/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "leib/combinatorics.hpp"

namespace leib {

namespace {
const UniPoly kZeroPoly;
}

TruncSeries::TruncSeries(unsigned order, std::vector<UniPoly> coeffs)
    : order_(order), c_(std::move(coeffs)) {
  c_.resize(order_ + 1);
}

const UniPoly& TruncSeries::coeff(unsigned n) const {
  return n < c_.size() ? c_[n] : kZeroPoly;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  if (o.order_ > order_) {
    order_ = o.order_;
    c_.resize(order_ + 1);
  }
  for (unsigned n = 0; n <= o.order_; ++n) c_[n] += o.c_[n];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  if (o.order_ > order_) {
    order_ = o.order_;
    c_.resize(order_ + 1);
  }
  for (unsigned n = 0; n <= o.order_; ++n) c_[n] -= o.c_[n];
  return *this;
}

TruncSeries TruncSeries::scaled_by_poly(const UniPoly& p) const {
  TruncSeries out(order_);
  for (unsigned n = 0; n <= order_; ++n) out.c_[n] = c_[n] * p;
  return out;
}

TruncSeries TruncSeries::scaled(const Rational& s) const {
  TruncSeries out(order_);
  for (unsigned n = 0; n <= order_; ++n) out.c_[n] = c_[n] * s;
  return out;
}

TruncSeries TruncSeries::shifted_by_u_power(unsigned k) const {
  TruncSeries out(order_);
  for (unsigned n = k; n <= order_; ++n) out.c_[n] = c_[n - k];
  return out;
}

TruncSeries TruncSeries::substituted_u_times_t() const {
  TruncSeries out(order_);
  for (unsigned n = 0; n <= order_; ++n) out.c_[n] = c_[n] * UniPoly::monomial(n);
  return out;
}

TruncSeries mul(const TruncSeries& x, const TruncSeries& y, Exec exec) {
  unsigned order = std::max(x.order(), y.order());
  TruncSeries out(order);
  parallel_for(order + 1, exec, [&](std::size_t n) {
    UniPoly acc;
    for (std::size_t i = 0; i <= n; ++i) acc += x.coeff(i) * y.coeff(n - i);
    out.set_coeff(static_cast<unsigned>(n), std::move(acc));
  });
  return out;
}

TruncSeries log_one_minus(unsigned order, const UniPoly& scale) {
  TruncSeries out(order);
  UniPoly power = UniPoly::constant(Rational(1));
  for (unsigned n = 1; n <= order; ++n) {
    power = power * scale;
    out.set_coeff(n, power * Rational(-1, static_cast<long>(n)));
  }
  return out;
}

namespace {

/// sum_n L_n(t) u^n to the given order.
TruncSeries leibnitz_gf(unsigned order) {
  TruncSeries s(order);
  for (unsigned n = 0; n <= order; ++n) s.set_coeff(n, leibnitz_polynomial(n));
  return s;
}

/// (1-u)(1-tu) - 1 = -(1+t) u + t u^2.
TruncSeries leibnitz_gf_denominator(unsigned order) {
  TruncSeries d(order);
  if (order >= 1)
    d.set_coeff(1, UniPoly({Rational(-1), Rational(-1)}));
  if (order >= 2) d.set_coeff(2, UniPoly::monomial(1));
  return d;
}

std::vector<ReportEntry> compare_series(const TruncSeries& lhs, const TruncSeries& rhs,
                                        const std::string& param_prefix) {
  std::vector<ReportEntry> out;
  for (unsigned n = 0; n <= lhs.order(); ++n) {
    ReportEntry e;
    e.params = param_prefix + "u^" + std::to_string(n);
    e.pass = lhs.coeff(n) == rhs.coeff(n);
    if (!e.pass) {
      e.lhs = lhs.coeff(n).str();
      e.rhs = rhs.coeff(n).str();
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

std::vector<ReportEntry> check_gf_leibnitz(unsigned order) {
  TruncSeries lhs = mul(leibnitz_gf_denominator(order), leibnitz_gf(order));
  TruncSeries rhs = log_one_minus(order, UniPoly::constant(Rational(1))) +
                    log_one_minus(order, UniPoly::monomial(1));
  return compare_series(lhs, rhs, "");
}

std::vector<ReportEntry> check_gf_daehee(unsigned order) {
  TruncSeries gd(order);
  for (unsigned n = 0; n <= order; ++n)
    gd.set_coeff(n, UniPoly::constant(daehee(n) / Rational(factorial(n))));
  TruncSeries lhs = gd.shifted_by_u_power(1);
  TruncSeries rhs = log_one_minus(order, UniPoly::constant(Rational(-1)));  // log(1+u)
  return compare_series(lhs, rhs, "");
}

std::vector<ReportEntry> check_gf_changhee(unsigned order) {
  TruncSeries gc(order);
  for (unsigned n = 0; n <= order; ++n)
    gc.set_coeff(n, UniPoly::constant(changhee(n) / Rational(factorial(n))));
  TruncSeries two_plus_u(order);
  two_plus_u.set_coeff(0, UniPoly::constant(Rational(2)));
  if (order >= 1) two_plus_u.set_coeff(1, UniPoly::constant(Rational(1)));
  TruncSeries lhs = mul(two_plus_u, gc);
  TruncSeries rhs(order);
  rhs.set_coeff(0, UniPoly::constant(Rational(2)));
  return compare_series(lhs, rhs, "");
}

std::vector<ReportEntry> check_gf_y(unsigned order, const Rational& lambda) {
  TruncSeries gy(order);
  for (unsigned n = 0; n <= order; ++n)
    gy.set_coeff(n, UniPoly::constant(y_number(n, lambda) / Rational(factorial(n))));
  // lambda(1 + lambda u) - 1 = (lambda - 1) + lambda^2 u
  TruncSeries factor(order);
  factor.set_coeff(0, UniPoly::constant(lambda - Rational(1)));
  if (order >= 1) factor.set_coeff(1, UniPoly::constant(lambda * lambda));
  TruncSeries lhs = mul(factor, gy);
  TruncSeries rhs(order);
  rhs.set_coeff(0, UniPoly::constant(Rational(2)));
  return compare_series(lhs, rhs, "lambda=" + lambda.str() + " ");
}

std::vector<ReportEntry> check_gf_family(NumberFamily family, unsigned order,
                                         std::optional<Rational> lambda) {
  switch (family) {
    case NumberFamily::daehee:
      return check_gf_daehee(order);
    case NumberFamily::changhee:
      return check_gf_changhee(order);
    case NumberFamily::y:
      if (!lambda) throw std::invalid_argument("Y family requires a lambda parameter");
      return check_gf_y(order, *lambda);
  }
  throw std::invalid_argument("unknown number family");
}

std::vector<ReportEntry> check_functional_eq_fe(unsigned order) {
  // G_D(-u): coefficient of u^n is (-1)^n D_n/n! = 1/(n+1), but built from
  // the Daehee closed form rather than the simplified value.
  TruncSeries lhs(order);
  for (unsigned n = 0; n <= order; ++n) {
    Rational c = daehee(n) / Rational(factorial(n));
    if (n % 2 == 1) c = -c;
    lhs.set_coeff(n, UniPoly::constant(c));
  }
  TruncSeries gl1(order);
  for (unsigned n = 0; n <= order; ++n)
    gl1.set_coeff(n, UniPoly::constant(leibnitz_row_sum(n)));
  TruncSeries one_minus_half_u(order);
  one_minus_half_u.set_coeff(0, UniPoly::constant(Rational(1)));
  if (order >= 1) one_minus_half_u.set_coeff(1, UniPoly::constant(Rational(-1, 2)));
  TruncSeries rhs = mul(one_minus_half_u, gl1);
  return compare_series(lhs, rhs, "");
}

std::vector<ReportEntry> check_functional_eq_gl_daehee(unsigned order) {
  // (1 + t - ut) G_l(t,u)
  TruncSeries factor(order);
  factor.set_coeff(0, UniPoly({Rational(1), Rational(1)}));
  if (order >= 1) factor.set_coeff(1, UniPoly::monomial(1, Rational(-1)));
  TruncSeries lhs = mul(factor, leibnitz_gf(order));
  // G_D(-u) + t G_D(-ut): coefficient of u^n is (1 + t^(n+1))/(n+1).
  TruncSeries rhs(order);
  for (unsigned n = 0; n <= order; ++n) {
    Rational inv(1, static_cast<long>(n) + 1);
    UniPoly c = UniPoly::constant(inv) + UniPoly::monomial(n + 1, inv);
    rhs.set_coeff(n, std::move(c));
  }
  return compare_series(lhs, rhs, "");
}

std::vector<UniPoly> solve_leibnitz_coefficients(unsigned order) {
  // With D = -(1+t)u + t u^2 and R = log(1-u) + log(1-ut), matching the
  // coefficient of u^(n+1) in D*X = R gives
  //   X_n = (t X_{n-1} - R_{n+1}) / (1+t).
  // Track P_n with X_n = P_n/(1+t)^n to stay inside polynomial arithmetic.
  TruncSeries rhs = log_one_minus(order + 1, UniPoly::constant(Rational(1))) +
                    log_one_minus(order + 1, UniPoly::monomial(1));
  UniPoly one_plus_t({Rational(1), Rational(1)});
  std::vector<UniPoly> result;
  result.reserve(order + 1);
  UniPoly p = UniPoly::constant(Rational(1));  // P_0; X_0 = 1
  UniPoly one_plus_t_power = UniPoly::constant(Rational(1));  // (1+t)^(n-1)
  for (unsigned n = 0; n <= order; ++n) {
    if (n > 0) {
      p = UniPoly::monomial(1) * p - rhs.coeff(n + 1) * one_plus_t_power;
      one_plus_t_power = one_plus_t_power * one_plus_t;
    }
    UniPoly x = p;
    for (unsigned i = 0; i < n; ++i) x = x.exact_divide_linear(Rational(-1));
    result.push_back(std::move(x));
  }
  return result;
}

}  // namespace leib

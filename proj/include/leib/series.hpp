#pragma once

#include <vector>

#include "leib/parallel.hpp"
#include "leib/rational.hpp"
#include "leib/report.hpp"
#include "leib/special_numbers.hpp"
#include "leib/unipoly.hpp"

namespace leib {

/// Formal power series in u truncated at a fixed order, with polynomial-in-t
/// coefficients (univariate generating functions use constant polynomials).
/// Arithmetic truncates consistently; a shorter operand is zero-extended to
/// the longer order. Equality is coefficientwise.
class TruncSeries {
 public:
  explicit TruncSeries(unsigned order) : order_(order), c_(order + 1) {}
  TruncSeries(unsigned order, std::vector<UniPoly> coeffs);

  unsigned order() const { return order_; }
  /// Coefficient of u^n; zero beyond the truncation order.
  const UniPoly& coeff(unsigned n) const;
  void set_coeff(unsigned n, UniPoly p) { c_[n] = std::move(p); }

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  friend TruncSeries operator+(TruncSeries x, const TruncSeries& y) { return x += y; }
  friend TruncSeries operator-(TruncSeries x, const TruncSeries& y) { return x -= y; }

  TruncSeries scaled_by_poly(const UniPoly& p) const;
  TruncSeries scaled(const Rational& s) const;
  /// Multiplication by u^k; the top k coefficients fall off the truncation.
  TruncSeries shifted_by_u_power(unsigned k) const;
  /// Formal substitution u -> t*u.
  TruncSeries substituted_u_times_t() const;

  friend bool operator==(const TruncSeries& x, const TruncSeries& y) {
    return x.order_ == y.order_ && x.c_ == y.c_;
  }
  friend bool operator!=(const TruncSeries& x, const TruncSeries& y) { return !(x == y); }

 private:
  unsigned order_;
  std::vector<UniPoly> c_;
};

/// Cauchy product truncated at the common order. The parallel policy splits
/// over output coefficient indices; results are identical to serial.
TruncSeries mul(const TruncSeries& x, const TruncSeries& y, Exec exec = Exec::serial);

/// log(1 - scale*u) = -sum_{n>=1} scale^n u^n / n, truncated. `scale` is a
/// polynomial in t; the constant term of the result is zero.
TruncSeries log_one_minus(unsigned order, const UniPoly& scale);

/// ((1-u)(1-tu) - 1) * sum_n L_n(t) u^n = log(1-u) + log(1-ut), checked
/// coefficientwise mod u^(order+1). One entry per power of u.
std::vector<ReportEntry> check_gf_leibnitz(unsigned order);

/// Cross-multiplied generating-function checks for the number families:
///   Daehee:   u * sum D_n u^n/n!            = log(1+u)
///   Changhee: (2+u) * sum Ch_n u^n/n!       = 2
///   Y:        (lambda(1+lambda u) - 1) * sum Y_n(lambda) u^n/n! = 2
std::vector<ReportEntry> check_gf_daehee(unsigned order);
std::vector<ReportEntry> check_gf_changhee(unsigned order);
std::vector<ReportEntry> check_gf_y(unsigned order, const Rational& lambda);
std::vector<ReportEntry> check_gf_family(NumberFamily family, unsigned order,
                                         std::optional<Rational> lambda = std::nullopt);

/// G_D(-u) = (1 - u/2) G_l(1, u) mod u^(order+1).
std::vector<ReportEntry> check_functional_eq_fe(unsigned order);

/// (1 + t - ut) G_l(t, u) = G_D(-u) + t G_D(-ut) mod u^(order+1),
/// with polynomial-in-t coefficients.
std::vector<ReportEntry> check_functional_eq_gl_daehee(unsigned order);

/// Solves ((1-u)(1-tu) - 1) X = log(1-u) + log(1-ut) coefficient by
/// coefficient. Intermediates are tracked as P_n with X_n = P_n/(1+t)^n;
/// the final division by (1+t)^n is exact (asserted) and the returned
/// coefficients are genuine polynomials, equal to L_n(t).
std::vector<UniPoly> solve_leibnitz_coefficients(unsigned order);

}  // namespace leib

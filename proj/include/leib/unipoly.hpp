#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "leib/rational.hpp"

namespace leib {

/// Dense univariate polynomial over Rational. Normalized: the coefficient
/// vector carries no trailing zeros, so the zero polynomial is empty and
/// degree() is -1 for it.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly constant(Rational c);
  static UniPoly monomial(unsigned degree, Rational coeff = Rational(1));
  static UniPoly variable() { return monomial(1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of x^i; zero beyond the degree.
  const Rational& coeff(unsigned i) const;
  std::span<const Rational> coeffs() const { return c_; }

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o) { *this = *this * o; return *this; }
  UniPoly& operator*=(const Rational& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly p, const Rational& s) { return p *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly p) { return p *= s; }
  UniPoly operator-() const;

  Rational eval(const Rational& x) const;
  UniPoly derivative() const;
  /// p(x + c).
  UniPoly shifted_arg(const Rational& c) const;
  UniPoly antiderivative() const;
  Rational definite_integral(const Rational& a, const Rational& b) const;

  /// Divides by (x - root); the remainder must vanish, otherwise throws.
  UniPoly exact_divide_linear(const Rational& root) const;

  /// Ascending-degree rendering, e.g. "1/2 + 1/2*t" or "-x + x^2".
  std::string str(std::string_view var = "t") const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

 private:
  void normalize();
  std::vector<Rational> c_;
};

/// x(x-1)...(x-n+1), the constant 1 for n = 0.
UniPoly falling_factorial_poly(unsigned n);

}  // namespace leib

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace leib {

/// Arbitrary-precision rational kept in canonical form: denominator > 0,
/// gcd(|numerator|, denominator) = 1, zero stored as 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long value) : v_(value) {}  // NOLINT: implicit by design
  Rational(long num, long den);
  Rational(mpz_class num, mpz_class den);
  explicit Rational(mpz_class value);

  /// Accepts exactly "p" or "p/q" with an optional leading sign on p.
  static std::optional<Rational> parse(std::string_view text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  /// Canonical rendering: "p/q", or just "p" when q = 1; sign on the numerator.
  std::string str() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

 private:
  mpq_class v_;
};

/// Exact integer power with the 0^0 = 1 convention. Negative exponents
/// require a nonzero base; 0^negative throws std::domain_error.
Rational pow(const Rational& base, long exponent);

}  // namespace leib

#include "leib/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace leib {

namespace {

void require_nonzero_den(const mpz_class& den) {
  if (sgn(den) == 0) throw std::domain_error("rational: zero denominator");
}

}  // namespace

Rational::Rational(long num, long den) {
  require_nonzero_den(mpz_class(den));
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) {
  require_nonzero_den(den);
  v_ = mpq_class(std::move(num), std::move(den));
  v_.canonicalize();
}

Rational::Rational(mpz_class value) : v_(std::move(value)) {}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

std::string Rational::str() const {
  if (den() == 1) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) return std::nullopt;
  std::string num_digits(text.substr(num_begin, i - num_begin));

  std::string den_digits = "1";
  if (i < text.size()) {
    if (text[i] != '/') return std::nullopt;
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) return std::nullopt;
    den_digits.assign(text.substr(den_begin, text.size() - den_begin));
  }

  mpz_class num(num_digits, 10);
  mpz_class den(den_digits, 10);
  if (sgn(den) == 0) return std::nullopt;
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

Rational pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);  // includes 0^0 = 1
  bool invert = exponent < 0;
  if (invert && base.is_zero()) throw std::domain_error("rational: 0 raised to a negative power");
  unsigned long e = invert ? static_cast<unsigned long>(-(exponent + 1)) + 1ul
                           : static_cast<unsigned long>(exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), e);
  if (invert) std::swap(num, den);
  return Rational(std::move(num), std::move(den));
}

}  // namespace leib

#include "leib/volkenborn.hpp"

#include "leib/combinatorics.hpp"

namespace leib {

MahlerExpansion mahler_coefficients(const UniPoly& p) {
  MahlerExpansion m;
  m.source = p;
  unsigned d = p.is_zero() ? 0 : static_cast<unsigned>(p.degree());
  // Forward differences at 0: a_n = sum_{i=0..n} (-1)^(n-i) C(n,i) p(i).
  m.coefficients.reserve(d + 1);
  for (unsigned n = 0; n <= d; ++n) {
    Rational a(0);
    for (unsigned i = 0; i <= n; ++i) {
      Rational term = Rational(binomial(n, static_cast<long>(i))) *
                      p.eval(Rational(static_cast<long>(i)));
      a += ((n - i) % 2 == 0) ? term : -term;
    }
    m.coefficients.push_back(std::move(a));
  }
  return m;
}

UniPoly mahler_reconstruct(const MahlerExpansion& m) {
  UniPoly acc;
  for (std::size_t n = 0; n < m.coefficients.size(); ++n) {
    UniPoly basis = falling_factorial_poly(static_cast<unsigned>(n)) *
                    Rational(mpz_class(1), factorial(static_cast<unsigned>(n)));
    acc += basis * m.coefficients[n];
  }
  return acc;
}

Rational volkenborn_integral_poly(const UniPoly& p) {
  MahlerExpansion m = mahler_coefficients(p);
  Rational acc(0);
  for (std::size_t n = 0; n < m.coefficients.size(); ++n) {
    Rational term = m.coefficients[n] / Rational(static_cast<long>(n) + 1);
    acc += (n % 2 == 0) ? term : -term;
  }
  return acc;
}

bool volkenborn_shift_check(const UniPoly& p) {
  Rational lhs = volkenborn_integral_poly(p.shifted_arg(Rational(1))) -
                 volkenborn_integral_poly(p);
  Rational rhs = p.derivative().eval(Rational(0));
  return lhs == rhs;
}

Rational volkenborn_falling_product(unsigned n, unsigned m) {
  Rational acc(0);
  for (unsigned k = 0; k <= m; ++k) {
    Rational term(binomial(n, static_cast<long>(k)) * binomial(m, static_cast<long>(k)) *
                      factorial(k) * factorial(n + m - k),
                  mpz_class(n + m - k + 1));
    acc += ((m + n - k) % 2 == 0) ? term : -term;
  }
  return acc;
}

UniPoly theorem_a11_polynomial(unsigned n) {
  UniPoly acc;
  for (unsigned k = 0; k <= n; ++k) {
    Rational c = Rational(binomial(n, static_cast<long>(k))) *
                 volkenborn_falling_product(k, n - k);
    acc += UniPoly::monomial(n - k, c);
  }
  Rational scale(mpz_class(1), factorial(n));
  if (n % 2 == 1) scale = -scale;
  return acc * scale;
}

UniPoly theorem_ki1_polynomial(unsigned n) {
  UniPoly acc;
  for (unsigned k = 0; k <= n; ++k) {
    Rational c(0);
    for (unsigned j = 0; j <= n - k; ++j) {
      Rational term(binomial(n, static_cast<long>(k)) * binomial(n - k, static_cast<long>(j)) *
                        binomial(k, static_cast<long>(j)) * factorial(j) * factorial(n - j),
                    mpz_class(n - j + 1));
      c += (j % 2 == 0) ? term : -term;
    }
    acc += UniPoly::monomial(n - k, c);
  }
  return acc * Rational(mpz_class(1), factorial(n));
}

Rational corollary_ki2_sum(unsigned n) {
  Rational acc(0);
  for (unsigned k = 0; k <= n; ++k) {
    for (unsigned j = 0; j <= n - k; ++j) {
      Rational term(binomial(n, static_cast<long>(k)) * binomial(n - k, static_cast<long>(j)) *
                        binomial(k, static_cast<long>(j)) * factorial(j) * factorial(n - j),
                    mpz_class(n - j + 1));
      acc += (j % 2 == 0) ? term : -term;
    }
  }
  return acc / Rational(factorial(n));
}

}  // namespace leib

#include "leib/special_numbers.hpp"

#include <stdexcept>

#include "leib/combinatorics.hpp"

namespace leib {

namespace {

void require_k_le_n(unsigned n, unsigned k) {
  if (k > n) throw std::domain_error("leibnitz: k > n is outside the triangle");
}

}  // namespace

Rational leibnitz(unsigned n, unsigned k) {
  require_k_le_n(n, k);
  return Rational(mpz_class(1), mpz_class(n + 1) * binomial(n, static_cast<long>(k)));
}

Rational leibnitz_sum_form(unsigned n, unsigned k) {
  require_k_le_n(n, k);
  Rational acc(0);
  for (unsigned v = 0; v <= k; ++v) {
    Rational term(binomial(k, static_cast<long>(v)), mpz_class(n - v + 1));
    acc += ((k - v) % 2 == 0) ? term : -term;
  }
  return acc;
}

LeibnitzTriangle leibnitz_triangle(unsigned n_max) {
  LeibnitzTriangle tri;
  tri.rows.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    std::vector<Rational> row;
    row.reserve(n + 1);
    row.emplace_back(1, static_cast<long>(n) + 1);
    for (unsigned k = 1; k <= n; ++k) {
      row.push_back(Rational(static_cast<long>(k), static_cast<long>(n) + 1) *
                    tri.rows[n - 1][k - 1]);
    }
    tri.rows.push_back(std::move(row));
  }
  return tri;
}

UniPoly leibnitz_polynomial(unsigned n) {
  std::vector<Rational> coeffs;
  coeffs.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) coeffs.push_back(leibnitz(n, k));
  return UniPoly(std::move(coeffs));
}

Rational leibnitz_row_sum(unsigned n) {
  Rational acc(0);
  for (unsigned k = 0; k <= n; ++k) acc += leibnitz(n, k);
  return acc;
}

Rational daehee(unsigned n) {
  Rational v(factorial(n), mpz_class(n + 1));
  return (n % 2 == 0) ? v : -v;
}

Rational changhee(unsigned n) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, n);
  Rational v(factorial(n), den);
  return (n % 2 == 0) ? v : -v;
}

Rational y_number(unsigned n, const Rational& lambda) {
  if (lambda == Rational(1)) throw std::domain_error("y_number: pole at lambda = 1");
  Rational denom = lambda - Rational(1);
  Rational v = Rational(2) * Rational(factorial(n)) / denom;
  v *= pow(lambda * lambda / denom, static_cast<long>(n));
  return (n % 2 == 0) ? v : -v;
}

Rational changhee_from_y(unsigned n) {
  Rational v = y_number(n, Rational(-1));
  return (n % 2 == 0) ? -v : v;
}

NumberFamilyValue number_family_value(NumberFamily family, unsigned n,
                                      std::optional<Rational> lambda) {
  NumberFamilyValue out{family, n, std::nullopt, Rational(0)};
  switch (family) {
    case NumberFamily::daehee:
      out.value = daehee(n);
      break;
    case NumberFamily::changhee:
      out.value = changhee(n);
      break;
    case NumberFamily::y:
      if (!lambda) throw std::invalid_argument("Y family requires a lambda parameter");
      out.parameter = *lambda;
      out.value = y_number(n, *lambda);
      break;
  }
  return out;
}

std::optional<TriangleMismatch> cross_check_triangle(unsigned n_max, Exec exec) {
  LeibnitzTriangle tri = leibnitz_triangle(n_max);
  std::vector<std::optional<TriangleMismatch>> per_row(n_max + 1);
  parallel_for(n_max + 1, exec, [&](std::size_t n) {
    for (unsigned k = 0; k <= n; ++k) {
      Rational closed = leibnitz(static_cast<unsigned>(n), k);
      Rational sum = leibnitz_sum_form(static_cast<unsigned>(n), k);
      const Rational& rec = tri.at(static_cast<unsigned>(n), k);
      if (closed != sum || closed != rec) {
        per_row[n] = TriangleMismatch{static_cast<unsigned>(n), k, closed, sum, rec};
        return;
      }
    }
  });
  for (const auto& m : per_row)
    if (m) return m;
  return std::nullopt;
}

}  // namespace leib

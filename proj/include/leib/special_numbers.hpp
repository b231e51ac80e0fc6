#pragma once

#include <optional>
#include <vector>

#include "leib/parallel.hpp"
#include "leib/rational.hpp"
#include "leib/unipoly.hpp"

namespace leib {

/// l(n,k) = 1/((n+1) C(n,k)). Throws std::domain_error for k > n, where the
/// binomial vanishes and the value is undefined.
Rational leibnitz(unsigned n, unsigned k);

/// The alternating finite sum sum_{v=0..k} (-1)^(k-v) C(k,v)/(n-v+1);
/// equal to leibnitz(n,k) but computed independently of it.
Rational leibnitz_sum_form(unsigned n, unsigned k);

/// Row n holds l(n,0..n). Built purely from the recurrence
/// l(n,0) = 1/(n+1), l(n,k) = (k/(n+1)) l(n-1,k-1); never from the closed
/// form, so it serves as an independent oracle.
struct LeibnitzTriangle {
  std::vector<std::vector<Rational>> rows;
  const Rational& at(unsigned n, unsigned k) const { return rows[n][k]; }
};
LeibnitzTriangle leibnitz_triangle(unsigned n_max);

/// L_n(t) = sum_k l(n,k) t^k.
UniPoly leibnitz_polynomial(unsigned n);

/// sum_k l(n,k) = L_n(1).
Rational leibnitz_row_sum(unsigned n);

Rational daehee(unsigned n);    // (-1)^n n!/(n+1)
Rational changhee(unsigned n);  // (-1)^n n!/2^n

/// Y_n(lambda) = (-1)^n (2 n!/(lambda-1)) (lambda^2/(lambda-1))^n.
/// Throws std::domain_error at the lambda = 1 pole.
Rational y_number(unsigned n, const Rational& lambda);

/// (-1)^(n+1) Y_n(-1); equals changhee(n).
Rational changhee_from_y(unsigned n);

enum class NumberFamily { daehee, changhee, y };

struct NumberFamilyValue {
  NumberFamily family;
  unsigned index = 0;
  std::optional<Rational> parameter;  // lambda, Y family only
  Rational value;
};
NumberFamilyValue number_family_value(NumberFamily family, unsigned n,
                                      std::optional<Rational> lambda = std::nullopt);

/// First mismatch, if any, between the closed form, the sum form, and the
/// recurrence triangle over 0 <= k <= n <= n_max.
struct TriangleMismatch {
  unsigned n = 0, k = 0;
  Rational closed, sum, recurrence;
};
std::optional<TriangleMismatch> cross_check_triangle(unsigned n_max,
                                                     Exec exec = Exec::serial);

}  // namespace leib

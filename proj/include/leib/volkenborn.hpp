#pragma once

#include <vector>

#include "leib/rational.hpp"
#include "leib/unipoly.hpp"

namespace leib {

/// Expansion of a polynomial in the binomial-coefficient basis C(x,n):
/// source = sum_n coefficients[n] * C(x,n). The coefficients are the forward
/// differences of the polynomial at 0.
struct MahlerExpansion {
  UniPoly source;
  std::vector<Rational> coefficients;  // a_0 .. a_deg
};
MahlerExpansion mahler_coefficients(const UniPoly& p);

/// Rebuilds sum_n a_n C(x,n) as a polynomial (test oracle for the expansion).
UniPoly mahler_reconstruct(const MahlerExpansion& m);

/// Volkenborn integral of a polynomial: sum_n (-1)^n a_n/(n+1) over the
/// Mahler coefficients a_n. Yields the Bernoulli numbers on monomials
/// (B_1 = -1/2 convention).
Rational volkenborn_integral_poly(const UniPoly& p);

/// Whether integral(p(x+1)) - integral(p) = p'(0).
bool volkenborn_shift_check(const UniPoly& p);

/// Integral of the falling-factorial product x_(n) x_(m):
/// sum_{k=0..m} (-1)^(m+n-k) C(n,k) C(m,k) k!(n+m-k)!/(n+m-k+1).
Rational volkenborn_falling_product(unsigned n, unsigned m);

/// ((-1)^n/n!) sum_k C(n,k) t^(n-k) V(k, n-k) with V the falling-factorial
/// product integral; equals leibnitz_polynomial(n).
UniPoly theorem_a11_polynomial(unsigned n);

/// (1/n!) sum_{k} sum_{j} (-1)^j C(n,k) C(n-k,j) C(k,j) j!(n-j)!/(n-j+1)
/// t^(n-k); equals leibnitz_polynomial(n).
UniPoly theorem_ki1_polynomial(unsigned n);

/// The same double sum at t = 1; equals the Leibnitz row sum L_n(1).
Rational corollary_ki2_sum(unsigned n);

}  // namespace leib

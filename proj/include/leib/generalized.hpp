#pragma once

#include <string>
#include <utility>
#include <vector>

#include "leib/bipoly.hpp"
#include "leib/rational.hpp"

namespace leib {

/// L(n,k;a,b): the double binomial sum
///   sum_{j=0..k} sum_{v=0..n-k} (-1)^(n-j-v) C(k,j) C(n-k,v)
///     (a^(k-j) b^(n+j-k+1) - a^(n-v+1) b^v)/(n+j-k-v+1)
/// with 0^0 = 1. Any rational endpoints are accepted; the sum is a
/// polynomial identity in (a, b). Throws std::domain_error for k > n.
Rational gen_leibnitz(unsigned n, unsigned k, const Rational& a, const Rational& b);

/// The same double sum with a, b left as indeterminates. Homogeneous of
/// total degree n+1.
BiPoly gen_leibnitz_symbolic(unsigned n, unsigned k);

/// Independent oracle: expands (x-a)^k (b-x)^(n-k) in coefficient form and
/// integrates the antiderivative exactly over [a, b]. Shares no code path
/// with the double sum.
Rational integration_oracle(unsigned n, unsigned k, const Rational& a, const Rational& b);

/// Whether int_a^b (x-a)^(alpha-1) (b-x)^(beta-1) dx computed by the
/// expand-then-integrate oracle equals (b-a)^(alpha+beta-1) B(alpha,beta).
/// Requires alpha, beta >= 1.
bool ik_formula_check(unsigned alpha, unsigned beta, const Rational& a, const Rational& b);

/// int_a^b B_k^n(x;a,b) dx = C(n,k) (b-a)^(-n) int_a^b (x-a)^k (b-x)^(n-k) dx.
/// Throws std::domain_error when a = b (the basis is undefined there).
Rational bernstein_basis_integral(unsigned n, unsigned k, const Rational& a, const Rational& b);

/// gen_leibnitz at a = 0, b = 1; equals leibnitz(n,k).
Rational specialize_classical(unsigned n, unsigned k);

/// Compares the symbolic double sum against two candidate closed forms,
///   scaled:  (b-a)^(n+1) B(k+1, n-k+1)
///   linear:  (b-a)       B(k+1, n-k+1)
/// and records which one the exact integration oracle confirms. For n = 0
/// the candidates coincide.
struct GlnumAdjudication {
  unsigned n = 0, k = 0;
  BiPoly double_sum;
  BiPoly scaled_candidate;
  BiPoly linear_candidate;
  bool matches_scaled = false;
  bool matches_linear = false;
  bool oracle_matches_scaled = false;
  bool oracle_matches_linear = false;
  /// One-line outcome, e.g. "oracle confirms (b-a)^(n+1)*B(k+1,n-k+1)".
  std::string summary() const;
};
GlnumAdjudication glnum_adjudicate(unsigned n, unsigned k);

/// Fixed (a, b) grid used by the oracle-equality sweeps: includes negative,
/// zero, reversed, and coincident endpoints.
const std::vector<std::pair<Rational, Rational>>& default_ab_grid();

}  // namespace leib

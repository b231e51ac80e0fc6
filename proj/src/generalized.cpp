#include "leib/generalized.hpp"

#include <cassert>
#include <stdexcept>

#include "leib/combinatorics.hpp"
#include "leib/unipoly.hpp"

namespace leib {

namespace {

void require_k_le_n(unsigned n, unsigned k) {
  if (k > n) throw std::domain_error("gen_leibnitz: k > n is outside the index range");
}

int term_sign(unsigned n, unsigned j, unsigned v) {
  return ((n - j - v) % 2 == 0) ? 1 : -1;
}

}  // namespace

Rational gen_leibnitz(unsigned n, unsigned k, const Rational& a, const Rational& b) {
  require_k_le_n(n, k);
  Rational acc(0);
  for (unsigned j = 0; j <= k; ++j) {
    for (unsigned v = 0; v <= n - k; ++v) {
      unsigned den = n + j - k - v + 1;
      assert(den >= j + 1);  // v <= n-k keeps the denominator positive
      Rational coeff(binomial(k, static_cast<long>(j)) * binomial(n - k, static_cast<long>(v)),
                     mpz_class(den));
      Rational diff = pow(a, static_cast<long>(k - j)) * pow(b, static_cast<long>(n + j - k + 1)) -
                      pow(a, static_cast<long>(n - v + 1)) * pow(b, static_cast<long>(v));
      Rational term = coeff * diff;
      acc += (term_sign(n, j, v) > 0) ? term : -term;
    }
  }
  return acc;
}

BiPoly gen_leibnitz_symbolic(unsigned n, unsigned k) {
  require_k_le_n(n, k);
  BiPoly acc;
  for (unsigned j = 0; j <= k; ++j) {
    for (unsigned v = 0; v <= n - k; ++v) {
      unsigned den = n + j - k - v + 1;
      Rational coeff(binomial(k, static_cast<long>(j)) * binomial(n - k, static_cast<long>(v)),
                     mpz_class(den));
      if (term_sign(n, j, v) < 0) coeff = -coeff;
      acc += BiPoly::monomial(k - j, n + j - k + 1, coeff);
      acc -= BiPoly::monomial(n - v + 1, v, coeff);
    }
  }
  return acc;
}

Rational integration_oracle(unsigned n, unsigned k, const Rational& a, const Rational& b) {
  require_k_le_n(n, k);
  UniPoly x = UniPoly::monomial(1);
  UniPoly left = x - UniPoly::constant(a);    // x - a
  UniPoly right = UniPoly::constant(b) - x;   // b - x
  UniPoly integrand = UniPoly::constant(Rational(1));
  for (unsigned i = 0; i < k; ++i) integrand = integrand * left;
  for (unsigned i = 0; i < n - k; ++i) integrand = integrand * right;
  return integrand.definite_integral(a, b);
}

bool ik_formula_check(unsigned alpha, unsigned beta, const Rational& a, const Rational& b) {
  if (alpha == 0 || beta == 0)
    throw std::domain_error("ik_formula_check: alpha and beta must be positive");
  Rational lhs = integration_oracle(alpha + beta - 2, alpha - 1, a, b);
  Rational rhs = pow(b - a, static_cast<long>(alpha + beta - 1)) * beta_int(alpha, beta);
  return lhs == rhs;
}

Rational bernstein_basis_integral(unsigned n, unsigned k, const Rational& a, const Rational& b) {
  require_k_le_n(n, k);
  if (a == b)
    throw std::domain_error("bernstein_basis_integral: undefined for a = b");
  return Rational(binomial(n, static_cast<long>(k))) *
         pow(b - a, -static_cast<long>(n)) * integration_oracle(n, k, a, b);
}

Rational specialize_classical(unsigned n, unsigned k) {
  return gen_leibnitz(n, k, Rational(0), Rational(1));
}

GlnumAdjudication glnum_adjudicate(unsigned n, unsigned k) {
  GlnumAdjudication adj;
  adj.n = n;
  adj.k = k;
  adj.double_sum = gen_leibnitz_symbolic(n, k);

  Rational beta = beta_int(k + 1, n - k + 1);
  BiPoly b_minus_a = BiPoly::var_b() - BiPoly::var_a();
  adj.scaled_candidate = b_minus_a.pow(n + 1) * beta;
  adj.linear_candidate = b_minus_a * beta;
  adj.matches_scaled = adj.double_sum == adj.scaled_candidate;
  adj.matches_linear = adj.double_sum == adj.linear_candidate;

  // Spot-check the candidates against the exact integral at a few points.
  static const std::vector<std::pair<Rational, Rational>> points = {
      {Rational(0), Rational(1)}, {Rational(-1), Rational(2)}, {Rational(1, 2), Rational(5, 2)}};
  adj.oracle_matches_scaled = true;
  adj.oracle_matches_linear = true;
  for (const auto& [a, b] : points) {
    Rational oracle = integration_oracle(n, k, a, b);
    if (oracle != adj.scaled_candidate.eval_at(a, b)) adj.oracle_matches_scaled = false;
    if (oracle != adj.linear_candidate.eval_at(a, b)) adj.oracle_matches_linear = false;
  }
  return adj;
}

std::string GlnumAdjudication::summary() const {
  std::string s;
  if (matches_scaled && oracle_matches_scaled)
    s = "oracle confirms (b-a)^(n+1)*B(k+1,n-k+1)";
  else
    s = "oracle does not confirm (b-a)^(n+1)*B(k+1,n-k+1)";
  if (matches_linear && oracle_matches_linear)
    s += "; (b-a)*B(k+1,n-k+1) coincides";
  else
    s += "; (b-a)*B(k+1,n-k+1) differs";
  return s;
}

const std::vector<std::pair<Rational, Rational>>& default_ab_grid() {
  static const std::vector<std::pair<Rational, Rational>> grid = {
      {Rational(0), Rational(1)},
      {Rational(1), Rational(3)},
      {Rational(-1), Rational(2)},
      {Rational(-2), Rational(-1)},
      {Rational(1, 2), Rational(5, 2)},
      {Rational(-3, 2), Rational(1, 3)},
      {Rational(2), Rational(-1)},
      {Rational(3), Rational(0)},
      {Rational(0), Rational(0)},
      {Rational(2), Rational(2)},
  };
  return grid;
}

}  // namespace leib

#include "leib/identities.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "leib/combinatorics.hpp"
#include "leib/generalized.hpp"
#include "leib/series.hpp"
#include "leib/special_numbers.hpp"
#include "leib/unipoly.hpp"
#include "leib/volkenborn.hpp"

namespace leib {

std::vector<Rational> default_t_samples(std::size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  if (count > 0) out.emplace_back(1);
  if (count > 1) out.emplace_back(2);
  for (long j = 0; out.size() < count; ++j) {
    out.push_back(Rational(-(j + 1), j + 2));
    if (out.size() < count) out.push_back(Rational(4 * j + 3, 4 * j + 7));
    if (out.size() < count) out.emplace_back(3 * j + 5);
  }
  return out;
}

std::vector<Rational> default_lambda_samples() {
  return {Rational(-1), Rational(2), Rational(-3), Rational(5, 2)};
}

namespace {

std::string pstr(const char* name, unsigned v) {
  return std::string(name) + "=" + std::to_string(v);
}
std::string pstr(const char* name, const Rational& v) {
  return std::string(name) + "=" + v.str();
}

ReportEntry value_entry(std::string params, const Rational& lhs, const Rational& rhs) {
  ReportEntry e;
  e.params = std::move(params);
  e.pass = lhs == rhs;
  if (!e.pass) {
    e.lhs = lhs.str();
    e.rhs = rhs.str();
  }
  return e;
}

ReportEntry poly_entry(std::string params, const UniPoly& lhs, const UniPoly& rhs) {
  ReportEntry e;
  e.params = std::move(params);
  e.pass = lhs == rhs;
  if (!e.pass) {
    e.lhs = lhs.str();
    e.rhs = rhs.str();
  }
  return e;
}

// (1/(1+t)) sum_{j=0..n} w_j (t/(1+t))^(n-j) (1 + t^(j+1)) with caller-chosen
// weights w_j; shared by the THM-1A / COR-2 / COR-C1 right-hand sides.
Rational weighted_ratio_sum(unsigned n, const Rational& t,
                            const std::function<Rational(unsigned)>& weight) {
  Rational one_plus_t = t + Rational(1);
  Rational ratio = t / one_plus_t;
  Rational acc(0);
  for (unsigned j = 0; j <= n; ++j) {
    acc += weight(j) * pow(ratio, static_cast<long>(n - j)) *
           (Rational(1) + pow(t, static_cast<long>(j) + 1));
  }
  return acc / one_plus_t;
}

// (1/(t+1)) sum_{k=0..n} (1/(n-k+1)) (t/(t+1))^k (1 + t^(n-k+1)).
Rational rhs_ik1(unsigned n, const Rational& t) {
  Rational one_plus_t = t + Rational(1);
  Rational ratio = t / one_plus_t;
  Rational acc(0);
  for (unsigned k = 0; k <= n; ++k) {
    acc += Rational(1, static_cast<long>(n - k) + 1) * pow(ratio, static_cast<long>(k)) *
           (Rational(1) + pow(t, static_cast<long>(n - k) + 1));
  }
  return acc / one_plus_t;
}

// sum_k t^k/((n+1) C(n,k)) straight from the binomials.
Rational direct_row_poly_value(unsigned n, const Rational& t) {
  Rational acc(0);
  for (unsigned k = 0; k <= n; ++k) {
    acc += pow(t, static_cast<long>(k)) /
           Rational(mpz_class(n + 1) * binomial(n, static_cast<long>(k)));
  }
  return acc;
}

std::vector<ReportEntry> check_thm_ik1(const RunConfig& cfg) {
  std::vector<ReportEntry> out;
  for (unsigned n = 0; n <= cfg.depth; ++n) {
    UniPoly ln = leibnitz_polynomial(n);
    for (const Rational& t : cfg.t_samples)
      out.push_back(value_entry(pstr("n", n) + " " + pstr("t", t), ln.eval(t), rhs_ik1(n, t)));
  }
  return out;
}

std::vector<ReportEntry> check_cor_ik2(const RunConfig& cfg) {
  std::vector<ReportEntry> out;
  for (unsigned n = 0; n <= cfg.depth; ++n) {
    Rational rhs(0);
    for (unsigned k = 0; k <= n; ++k)
      rhs += Rational(1) / (Rational(static_cast<long>(n - k) + 1) *
                            pow(Rational(2), static_cast<long>(k)));
    out.push_back(value_entry(pstr("n", n), leibnitz_row_sum(n), rhs));
  }
  return out;
}

std::vector<ReportEntry> check_thm_1a(const RunConfig& cfg) {
  std::vector<ReportEntry> out;
  for (unsigned n = 0; n <= cfg.depth; ++n) {
    UniPoly ln = leibnitz_polynomial(n);
    for (const Rational& t : cfg.t_samples) {
      Rational rhs = weighted_ratio_sum(n, t, [](unsigned j) {
        Rational w = daehee(j) / Rational(factorial(j));
        return (j % 2 == 0) ? w : -w;
      });
      out.push_back(value_entry(pstr("n", n) + " " + pstr("t", t), ln.eval(t), rhs));
    }
  }
  return out;
}

std::vector<ReportEntry> check_cor_2(const RunConfig& cfg) {
  std::vector<ReportEntry> out;
  for (unsigned n = 0; n <= cfg.depth; ++n) {
    UniPoly ln = leibnitz_polynomial(n);
    for (const Rational& t : cfg.t_samples) {
      Rational rhs = weighted_ratio_sum(
          n, t, [](unsigned j) { return Rational(1, static_cast<long>(j) + 1); });
      out.push_back(value_entry(pstr("n", n) + " " + pstr("t", t), ln.eval(t), rhs));
      out.push_back(value_entry(pstr("n", n) + " " + pstr("t", t) + " equiv-ik1", rhs,
                                rhs_ik1(n, t)));
    }
  }
  return out;
}

std::vector<ReportEntry> check_cor_c1(const RunConfig& cfg) {
  std::vector<ReportEntry> out;
  for (unsigned n = 0; n <= cfg.depth; ++n) {
    for (const Rational& t : cfg.t_samples) {
      Rational rhs = weighted_ratio_sum(
          n, t, [](unsigned j) { return Rational(1, static_cast<long>(j) + 1); });
      out.push_back(
          value_entry(pstr("n", n) + " " + pstr("t", t), direct_row_poly_value(n, t), rhs));
    }
  }
  return out;
}

std::vector<ReportEntry> check_cor_3(const RunConfig& cfg) {
  std::vector<ReportEntry> out;
  for (unsigned n = 0; n <= cfg.depth; ++n) {
    Rational rhs(0);
    for (unsigned j = 0; j <= n; ++j)
      rhs += pow(Rational(2), static_cast<long>(j) - static_cast<long>(n)) /
             Rational(static_cast<long>(j) + 1);
    out.push_back(value_entry(pstr("n", n), direct_row_poly_value(n, Rational(1)), rhs));
  }
  return out;
}

std::vector<ReportEntry> check_thm_ik3(const RunConfig& cfg) {
  std::vector<ReportEntry> out;
  for (unsigned n = 0; n <= cfg.depth; ++n) {
    Rational rhs(0);
    for (unsigned j = 0; j <= n; ++j) {
      Rational term = changhee(n - j) / (Rational(static_cast<long>(j) + 1) *
                                         Rational(factorial(n - j)));
      rhs += ((n - j) % 2 == 0) ? term : -term;
    }
    out.push_back(value_entry(pstr("n", n), direct_row_poly_value(n, Rational(1)), rhs));
  }
  return out;
}

std::vector<ReportEntry> check_cor_y(const RunConfig& cfg) {
  std::vector<ReportEntry> out;
  for (unsigned n = 0; n <= cfg.depth; ++n) {
    Rational rhs(0);
    for (unsigned j = 0; j <= n; ++j) {
      rhs -= y_number(n - j, Rational(-1)) /
             (Rational(static_cast<long>(j) + 1) * Rational(factorial(n - j)));
    }
    out.push_back(value_entry(pstr("n", n), direct_row_poly_value(n, Rational(1)), rhs));
  }
  return out;
}

std::vector<ReportEntry> check_thm_k1(const RunConfig& cfg) {
  std::vector<ReportEntry> out;
  for (unsigned n = 1; n <= cfg.depth; ++n) {
    Rational lhs = leibnitz_row_sum(n) - Rational(1, 2) * leibnitz_row_sum(n - 1);
    Rational rhs = daehee(n) / Rational(factorial(n));
    if (n % 2 == 1) rhs = -rhs;
    out.push_back(value_entry(pstr("n", n), lhs, rhs));
  }
  return out;
}

std::vector<ReportEntry> check_thm_k1d(const RunConfig& cfg) {
  std::vector<ReportEntry> out;
  for (unsigned n = 1; n <= cfg.depth; ++n) {
    Rational lhs = leibnitz_row_sum(n) - Rational(1, 2) * leibnitz_row_sum(n - 1);
    out.push_back(value_entry(pstr("n", n), lhs, Rational(1, static_cast<long>(n) + 1)));
  }
  return out;
}

std::vector<ReportEntry> check_recurrence(const RunConfig& cfg) {
  std::vector<ReportEntry> out;
  LeibnitzTriangle tri = leibnitz_triangle(cfg.depth);
  for (unsigned n = 0; n <= cfg.depth; ++n)
    for (unsigned k = 0; k <= n; ++k)
      out.push_back(
          value_entry(pstr("n", n) + " " + pstr("k", k), tri.at(n, k), leibnitz(n, k)));
  return out;
}

std::vector<ReportEntry> check_sum_form(const RunConfig& cfg) {
  std::vector<ReportEntry> out;
  for (unsigned n = 0; n <= cfg.depth; ++n)
    for (unsigned k = 0; k <= n; ++k)
      out.push_back(value_entry(pstr("n", n) + " " + pstr("k", k), leibnitz_sum_form(n, k),
                                leibnitz(n, k)));
  return out;
}

std::vector<ReportEntry> check_gln_spec(const RunConfig& cfg) {
  std::vector<ReportEntry> out;
  for (unsigned n = 0; n <= cfg.depth; ++n)
    for (unsigned k = 0; k <= n; ++k)
      out.push_back(value_entry(pstr("n", n) + " " + pstr("k", k), specialize_classical(n, k),
                                leibnitz(n, k)));
  return out;
}

std::vector<ReportEntry> check_gln_oracle(const RunConfig& cfg) {
  std::vector<ReportEntry> out;
  unsigned n_max = std::min(cfg.depth, 12u);
  for (unsigned n = 0; n <= n_max; ++n)
    for (unsigned k = 0; k <= n; ++k)
      for (const auto& [a, b] : default_ab_grid())
        out.push_back(value_entry(pstr("n", n) + " " + pstr("k", k) + " " + pstr("a", a) +
                                      " " + pstr("b", b),
                                  gen_leibnitz(n, k, a, b), integration_oracle(n, k, a, b)));
  return out;
}

std::vector<ReportEntry> check_gln_adj(const RunConfig& cfg) {
  std::vector<ReportEntry> out;
  unsigned n_max = std::min(cfg.depth, 12u);
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      GlnumAdjudication adj = glnum_adjudicate(n, k);
      ReportEntry e;
      e.params = pstr("n", n) + " " + pstr("k", k);
      bool linear_as_expected = (n == 0) ? adj.matches_linear : !adj.matches_linear;
      e.pass = adj.matches_scaled && adj.oracle_matches_scaled && linear_as_expected;
      e.note = adj.summary();
      if (!e.pass) {
        e.lhs = adj.double_sum.str();
        e.rhs = adj.scaled_candidate.str();
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<ReportEntry> check_gf_y_all(const RunConfig& cfg) {
  std::vector<ReportEntry> out;
  for (const Rational& lambda : cfg.lambda_samples) {
    auto entries = check_gf_y(cfg.depth, lambda);
    out.insert(out.end(), entries.begin(), entries.end());
  }
  return out;
}

std::vector<ReportEntry> check_v_a11(const RunConfig& cfg) {
  std::vector<ReportEntry> out;
  for (unsigned n = 0; n <= cfg.depth; ++n)
    out.push_back(poly_entry(pstr("n", n), theorem_a11_polynomial(n), leibnitz_polynomial(n)));
  return out;
}

std::vector<ReportEntry> check_v_ki1(const RunConfig& cfg) {
  std::vector<ReportEntry> out;
  for (unsigned n = 0; n <= cfg.depth; ++n)
    out.push_back(poly_entry(pstr("n", n), theorem_ki1_polynomial(n), leibnitz_polynomial(n)));
  return out;
}

std::vector<ReportEntry> check_v_ki2(const RunConfig& cfg) {
  std::vector<ReportEntry> out;
  for (unsigned n = 0; n <= cfg.depth; ++n)
    out.push_back(value_entry(pstr("n", n), corollary_ki2_sum(n), leibnitz_row_sum(n)));
  return out;
}

ReportEntry shift_entry(std::string params, const UniPoly& p) {
  Rational lhs = volkenborn_integral_poly(p.shifted_arg(Rational(1))) -
                 volkenborn_integral_poly(p);
  Rational rhs = p.derivative().eval(Rational(0));
  ReportEntry e = value_entry(std::move(params), lhs, rhs);
  return e;
}

std::vector<ReportEntry> check_v_shift(const RunConfig& cfg) {
  std::vector<ReportEntry> out;
  unsigned d_max = std::min(cfg.depth, 15u);
  for (unsigned d = 0; d <= d_max; ++d)
    out.push_back(shift_entry("p=x^" + std::to_string(d), UniPoly::monomial(d)));
  // Deterministic sampled polynomials (fixed seed keeps the check reproducible).
  std::mt19937 rng(20240517u);
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 12);
  std::uniform_int_distribution<unsigned> deg(0, d_max);
  unsigned samples = std::min(cfg.depth, 20u);
  for (unsigned s = 0; s < samples; ++s) {
    unsigned d = deg(rng);
    std::vector<Rational> coeffs;
    for (unsigned i = 0; i <= d; ++i) coeffs.emplace_back(num(rng), den(rng));
    out.push_back(shift_entry("p=seed#" + std::to_string(s), UniPoly(std::move(coeffs))));
  }
  return out;
}

std::vector<ReportEntry> check_v_prod(const RunConfig& cfg) {
  std::vector<ReportEntry> out;
  unsigned cap = std::min(cfg.depth, 10u);
  for (unsigned n = 0; n <= cap; ++n) {
    for (unsigned m = 0; m <= cap; ++m) {
      Rational direct =
          volkenborn_integral_poly(falling_factorial_poly(n) * falling_factorial_poly(m));
      out.push_back(value_entry(pstr("n", n) + " " + pstr("m", m),
                                volkenborn_falling_product(n, m), direct));
    }
  }
  for (unsigned n = 0; n <= cap; ++n)
    for (unsigned m = n + 1; m <= cap; ++m)
      out.push_back(value_entry("sym " + pstr("n", n) + " " + pstr("m", m),
                                volkenborn_falling_product(n, m),
                                volkenborn_falling_product(m, n)));
  return out;
}

std::vector<ReportEntry> check_fixture_corrupt(const RunConfig& cfg) {
  // Deliberately wrong right-hand side (2^(k+1) instead of 2^k): the harness
  // self-test relies on this check failing with real witness values.
  std::vector<ReportEntry> out;
  for (unsigned n = 0; n <= std::min(cfg.depth, 3u); ++n) {
    Rational rhs(0);
    for (unsigned k = 0; k <= n; ++k)
      rhs += Rational(1) / (Rational(static_cast<long>(n - k) + 1) *
                            pow(Rational(2), static_cast<long>(k) + 1));
    ReportEntry e = value_entry(pstr("n", n), leibnitz_row_sum(n), rhs);
    e.lhs = leibnitz_row_sum(n).str();
    e.rhs = rhs.str();
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<IdentityCheck> build_registry() {
  std::vector<IdentityCheck> reg;
  auto add = [&reg](std::string id, std::string statement, std::string parameter_space,
                    bool uses_t, bool uses_lambda,
                    std::function<std::vector<ReportEntry>(const RunConfig&)> run,
                    bool fixture = false) {
    reg.push_back({std::move(id), std::move(statement), std::move(parameter_space), fixture,
                   uses_t, uses_lambda, std::move(run)});
  };

  add("THM-IK1",
      "L_n(t) = 1/(t+1) * sum_{k=0..n} (t/(t+1))^k (1 + t^(n-k+1))/(n-k+1), pointwise at "
      "sampled t != -1",
      "0 <= n <= depth; t in t_samples (t != -1)",
      true, false, check_thm_ik1);
  add("COR-IK2", "sum_k l(n,k) = sum_{k=0..n} 1/((n-k+1) 2^k)", "0 <= n <= depth", false,
      false, check_cor_ik2);
  add("THM-1A",
      "L_n(t) = 1/(1+t) * sum_{j=0..n} (-1)^j (D_j/j!) (t/(1+t))^(n-j) (1 + t^(j+1)), "
      "pointwise at sampled t != -1",
      "0 <= n <= depth; t in t_samples (t != -1)",
      true, false, check_thm_1a);
  add("COR-2",
      "L_n(t) = 1/(1+t) * sum_{j=0..n} (t/(1+t))^(n-j) (1 + t^(j+1))/(j+1); also equivalent "
      "to THM-IK1 pointwise",
      "0 <= n <= depth; t in t_samples (t != -1)",
      true, false, check_cor_2);
  add("COR-C1",
      "sum_k t^k/((n+1) C(n,k)) = 1/(1+t) * sum_{j=0..n} (1 + t^(j+1))/(j+1) "
      "(t/(1+t))^(n-j), pointwise at sampled t != -1",
      "0 <= n <= depth; t in t_samples (t != -1)",
      true, false, check_cor_c1);
  add("COR-3", "sum_k 1/((n+1) C(n,k)) = sum_{j=0..n} 2^(j-n)/(j+1)", "0 <= n <= depth",
      false, false, check_cor_3);
  add("THM-IK3", "sum_k 1/((n+1) C(n,k)) = sum_{j=0..n} (-1)^(n-j) Ch_(n-j)/((j+1) (n-j)!)",
      "0 <= n <= depth",
      false, false, check_thm_ik3);
  add("COR-Y", "sum_k 1/((n+1) C(n,k)) = -sum_{j=0..n} Y_(n-j)(-1)/((j+1) (n-j)!)",
      "0 <= n <= depth", false, false, check_cor_y);
  add("THM-K1", "sum_k l(n,k) - (1/2) sum_k l(n-1,k) = (-1)^n D_n/n! for n >= 1",
      "1 <= n <= depth", false, false, check_thm_k1);
  add("THM-K1D", "sum_k l(n,k) - (1/2) sum_k l(n-1,k) = 1/(n+1) for n >= 1",
      "1 <= n <= depth", false, false, check_thm_k1d);
  add("REC", "recurrence triangle l(n,0) = 1/(n+1), l(n,k) = (k/(n+1)) l(n-1,k-1) agrees "
             "with the closed form",
      "0 <= k <= n <= depth",
      false, false, check_recurrence);
  add("SUMFORM", "l(n,k) = sum_{v=0..k} (-1)^(k-v) C(k,v)/(n-v+1)", "0 <= k <= n <= depth",
      false, false, check_sum_form);
  add("GLN-SPEC", "L(n,k;0,1) = l(n,k)", "0 <= k <= n <= depth", false, false, check_gln_spec);
  add("GLN-ORACLE",
      "double-sum L(n,k;a,b) = exact integral of (x-a)^k (b-x)^(n-k) over [a,b], on the "
      "fixed (a,b) grid, n <= 12",
      "0 <= k <= n <= min(depth, 12); (a,b) on the fixed grid",
      false, false, check_gln_oracle);
  add("GLN-ADJ",
      "closed form of L(n,k;a,b): exact integration confirms (b-a)^(n+1) B(k+1,n-k+1); the "
      "(b-a)^1 candidate coincides only at n = 0",
      "0 <= k <= n <= min(depth, 12)",
      false, false, check_gln_adj);
  add("GF-L", "((1-u)(1-tu) - 1) * sum_n L_n(t) u^n = log(1-u) + log(1-ut) mod u^(order+1)",
      "coefficients of u^0 .. u^depth",
      false, false, [](const RunConfig& cfg) { return check_gf_leibnitz(cfg.depth); });
  add("GF-D", "u * sum_n D_n u^n/n! = log(1+u) mod u^(order+1)",
      "coefficients of u^0 .. u^depth", false, false,
      [](const RunConfig& cfg) { return check_gf_daehee(cfg.depth); });
  add("GF-C", "(2+u) * sum_n Ch_n u^n/n! = 2 mod u^(order+1)",
      "coefficients of u^0 .. u^depth", false, false,
      [](const RunConfig& cfg) { return check_gf_changhee(cfg.depth); });
  add("GF-Y", "(lambda(1+lambda u) - 1) * sum_n Y_n(lambda) u^n/n! = 2 mod u^(order+1)",
      "lambda in lambda_samples (lambda != 1); coefficients of u^0 .. u^depth",
      false, true, check_gf_y_all);
  add("FE", "G_D(-u) = (1 - u/2) G_l(1,u) mod u^(order+1)",
      "coefficients of u^0 .. u^depth", false, false,
      [](const RunConfig& cfg) { return check_functional_eq_fe(cfg.depth); });
  add("FE-GLD", "(1 + t - ut) G_l(t,u) = G_D(-u) + t G_D(-ut) mod u^(order+1)",
      "coefficients of u^0 .. u^depth", false, false,
      [](const RunConfig& cfg) { return check_functional_eq_gl_daehee(cfg.depth); });
  add("V-A11",
      "((-1)^n/n!) sum_k C(n,k) t^(n-k) V(k,n-k) = L_n(t), V the falling-factorial product "
      "integral",
      "0 <= n <= depth",
      false, false, check_v_a11);
  add("V-KI1",
      "L_n(t) = (1/n!) sum_k sum_j (-1)^j C(n,k) C(n-k,j) C(k,j) j!(n-j)!/(n-j+1) t^(n-k)",
      "0 <= n <= depth",
      false, false, check_v_ki1);
  add("V-KI2", "sum_k l(n,k) = (1/n!) sum_k sum_j (-1)^j C(n,k) C(n-k,j) C(k,j) "
               "j!(n-j)!/(n-j+1)",
      "0 <= n <= depth",
      false, false, check_v_ki2);
  add("V-SHIFT", "volkenborn(p(x+1)) - volkenborn(p) = p'(0)",
      "monomials x^d for d <= min(depth, 15); fixed-seed sampled polynomials", false, false,
      check_v_shift);
  add("V-PROD",
      "V(n,m) = sum_k (-1)^(m+n-k) C(n,k) C(m,k) k!(n+m-k)!/(n+m-k+1) = volkenborn(x_(n) "
      "x_(m)); symmetric in (n,m)",
      "0 <= n, m <= min(depth, 10)",
      false, false, check_v_prod);
  add("FIXTURE-CORRUPT", "harness self-test: deliberately corrupted row-sum identity",
      "0 <= n <= min(depth, 3)",
      false, false, check_fixture_corrupt, /*fixture=*/true);
  return reg;
}

const IdentityCheck* find_check(const std::string& id) {
  for (const auto& c : identity_registry())
    if (c.id == id) return &c;
  return nullptr;
}

RunConfig resolve_config(const RunConfig& cfg, bool uses_t, bool uses_lambda) {
  RunConfig r = cfg;
  if (r.t_samples.empty()) r.t_samples = default_t_samples(cfg.depth + 2);
  if (r.lambda_samples.empty()) r.lambda_samples = default_lambda_samples();
  if (uses_t) {
    if (r.t_samples.empty()) throw std::invalid_argument("t sample set is empty");
    for (const Rational& t : r.t_samples)
      if (t == Rational(-1))
        throw std::invalid_argument("t = -1 is excluded: the identity divides by 1+t");
  }
  if (uses_lambda) {
    if (r.lambda_samples.empty()) throw std::invalid_argument("lambda sample set is empty");
    for (const Rational& l : r.lambda_samples)
      if (l == Rational(1))
        throw std::invalid_argument("lambda = 1 is excluded: pole of the Y family");
  }
  return r;
}

std::vector<ReportEntry> run_check(const IdentityCheck& check, const RunConfig& cfg) {
  RunConfig r = resolve_config(cfg, check.uses_t, check.uses_lambda);
  std::vector<ReportEntry> entries = check.run(r);
  for (auto& e : entries) {
    e.id = check.id;
    e.anchor = check.statement;
  }
  return entries;
}

VerificationReport assemble(std::vector<std::vector<ReportEntry>> groups) {
  // Id-sorted, generation order within each id: deterministic regardless of
  // execution policy.
  std::sort(groups.begin(), groups.end(), [](const auto& x, const auto& y) {
    if (x.empty() || y.empty()) return y.empty() < x.empty();
    return x.front().id < y.front().id;
  });
  VerificationReport report;
  report.registry_version = kRegistryVersion;
  for (auto& g : groups)
    for (auto& e : g) report.entries.push_back(std::move(e));
  return report;
}

}  // namespace

const std::vector<IdentityCheck>& identity_registry() {
  static const std::vector<IdentityCheck> reg = build_registry();
  return reg;
}

std::vector<std::string> registered_ids(bool include_fixtures) {
  std::vector<std::string> ids;
  for (const auto& c : identity_registry())
    if (include_fixtures || !c.fixture) ids.push_back(c.id);
  return ids;
}

bool is_registered(const std::string& id) { return find_check(id) != nullptr; }

VerificationReport run_identity(const std::string& id, const RunConfig& cfg) {
  const IdentityCheck* check = find_check(id);
  if (check == nullptr) throw std::invalid_argument("unknown identity id: " + id);
  return assemble({run_check(*check, cfg)});
}

VerificationReport run_identities(const std::vector<std::string>& ids, const RunConfig& cfg,
                                  Exec exec) {
  std::vector<const IdentityCheck*> checks;
  checks.reserve(ids.size());
  for (const auto& id : ids) {
    const IdentityCheck* check = find_check(id);
    if (check == nullptr) throw std::invalid_argument("unknown identity id: " + id);
    checks.push_back(check);
  }
  // Validate sample sets up front so precondition failures surface before
  // any parallel work starts.
  for (const auto* check : checks) resolve_config(cfg, check->uses_t, check->uses_lambda);
  std::vector<std::vector<ReportEntry>> groups(checks.size());
  parallel_for(checks.size(), exec,
               [&](std::size_t i) { groups[i] = run_check(*checks[i], cfg); });
  return assemble(std::move(groups));
}

VerificationReport run_all(const RunConfig& cfg, Exec exec) {
  return run_identities(registered_ids(false), cfg, exec);
}

}  // namespace leib

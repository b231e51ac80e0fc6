#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "leib/rational.hpp"

namespace leib {

/// Sparse bivariate polynomial over Rational in the indeterminates a, b.
/// Zero coefficients are never stored; equality is term-map equality.
/// Terms are kept in descending graded-lexicographic order (a before b),
/// which is also the canonical rendering order.
class BiPoly {
 public:
  struct GrlexDesc {
    bool operator()(const std::pair<unsigned, unsigned>& x,
                    const std::pair<unsigned, unsigned>& y) const {
      unsigned dx = x.first + x.second, dy = y.first + y.second;
      if (dx != dy) return dx > dy;
      return x.first > y.first;
    }
  };
  using TermMap = std::map<std::pair<unsigned, unsigned>, Rational, GrlexDesc>;

  BiPoly() = default;

  static BiPoly constant(Rational c) { return monomial(0, 0, std::move(c)); }
  static BiPoly var_a() { return monomial(1, 0); }
  static BiPoly var_b() { return monomial(0, 1); }
  static BiPoly monomial(unsigned deg_a, unsigned deg_b, Rational coeff = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rational& s);

  friend BiPoly operator+(BiPoly x, const BiPoly& y) { return x += y; }
  friend BiPoly operator-(BiPoly x, const BiPoly& y) { return x -= y; }
  friend BiPoly operator*(const BiPoly& x, const BiPoly& y);
  friend BiPoly operator*(BiPoly p, const Rational& s) { return p *= s; }
  friend BiPoly operator*(const Rational& s, BiPoly p) { return p *= s; }
  BiPoly operator-() const;

  BiPoly pow(unsigned e) const;
  /// Substitutes rational values for (a, b); 0^0 = 1.
  Rational eval_at(const Rational& a, const Rational& b) const;
  /// Exchanges the roles of a and b.
  BiPoly swapped_vars() const;

  /// Total degree shared by every term, if the polynomial is homogeneous;
  /// std::nullopt otherwise. The zero polynomial reports degree 0.
  std::optional<unsigned> homogeneous_degree() const;

  /// Canonical rendering, grlex-descending, e.g. "a^2/2 - a*b + b^2/2".
  std::string str() const;

  friend bool operator==(const BiPoly& x, const BiPoly& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const BiPoly& x, const BiPoly& y) { return !(x == y); }

 private:
  void add_term(unsigned deg_a, unsigned deg_b, const Rational& coeff);
  TermMap terms_;
};

}  // namespace leib

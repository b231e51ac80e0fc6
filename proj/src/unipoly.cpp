#include "leib/unipoly.hpp"

#include <stdexcept>
#include <utility>

namespace leib {

namespace {
const Rational kZero(0);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

UniPoly UniPoly::constant(Rational c) {
  UniPoly p;
  if (!c.is_zero()) p.c_.push_back(std::move(c));
  return p;
}

UniPoly UniPoly::monomial(unsigned degree, Rational coeff) {
  UniPoly p;
  if (!coeff.is_zero()) {
    p.c_.assign(degree + 1, Rational(0));
    p.c_.back() = std::move(coeff);
  }
  return p;
}

void UniPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& UniPoly::coeff(unsigned i) const {
  return i < c_.size() ? c_[i] : kZero;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
  UniPoly p(*this);
  for (auto& c : p.c_) c = -c;
  return p;
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> out(c_.size() - 1, Rational(0));
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(out));
}

UniPoly UniPoly::shifted_arg(const Rational& c) const {
  // Horner in (x + c).
  UniPoly shift = UniPoly::monomial(1) + UniPoly::constant(c);
  UniPoly acc;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * shift;
    acc += UniPoly::constant(c_[i]);
  }
  return acc;
}

UniPoly UniPoly::antiderivative() const {
  if (is_zero()) return UniPoly();
  std::vector<Rational> out(c_.size() + 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    out[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
  return UniPoly(std::move(out));
}

Rational UniPoly::definite_integral(const Rational& a, const Rational& b) const {
  UniPoly f = antiderivative();
  return f.eval(b) - f.eval(a);
}

UniPoly UniPoly::exact_divide_linear(const Rational& root) const {
  if (is_zero()) return UniPoly();
  // Synthetic division by (x - root).
  std::vector<Rational> out(c_.size() - 1, Rational(0));
  Rational carry(0);
  for (std::size_t i = c_.size(); i-- > 1;) {
    carry = c_[i] + carry * root;
    out[i - 1] = carry;
  }
  Rational remainder = c_[0] + carry * root;
  if (!remainder.is_zero())
    throw std::domain_error("exact_divide_linear: nonzero remainder");
  return UniPoly(std::move(out));
}

std::string UniPoly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    bool negative = c.sign() < 0;
    Rational mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.str();
    } else {
      if (!(mag.num() == 1 && mag.den() == 1)) out += mag.str() + "*";
      out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out;
}

UniPoly falling_factorial_poly(unsigned n) {
  UniPoly p = UniPoly::constant(Rational(1));
  for (unsigned i = 0; i < n; ++i) {
    p = p * (UniPoly::monomial(1) - UniPoly::constant(Rational(static_cast<long>(i))));
  }
  return p;
}

}  // namespace leib

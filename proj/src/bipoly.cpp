#include "leib/bipoly.hpp"

namespace leib {

BiPoly BiPoly::monomial(unsigned deg_a, unsigned deg_b, Rational coeff) {
  BiPoly p;
  if (!coeff.is_zero()) p.terms_.emplace(std::make_pair(deg_a, deg_b), std::move(coeff));
  return p;
}

void BiPoly::add_term(unsigned deg_a, unsigned deg_b, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto key = std::make_pair(deg_a, deg_b);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= s;
  return *this;
}

BiPoly operator*(const BiPoly& x, const BiPoly& y) {
  BiPoly out;
  for (const auto& [kx, cx] : x.terms_)
    for (const auto& [ky, cy] : y.terms_)
      out.add_term(kx.first + ky.first, kx.second + ky.second, cx * cy);
  return out;
}

BiPoly BiPoly::operator-() const {
  BiPoly p(*this);
  for (auto& [key, c] : p.terms_) c = -c;
  return p;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly acc = BiPoly::constant(Rational(1));
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

Rational BiPoly::eval_at(const Rational& a, const Rational& b) const {
  Rational acc(0);
  for (const auto& [key, c] : terms_)
    acc += c * leib::pow(a, key.first) * leib::pow(b, key.second);
  return acc;
}

BiPoly BiPoly::swapped_vars() const {
  BiPoly out;
  for (const auto& [key, c] : terms_) out.add_term(key.second, key.first, c);
  return out;
}

std::optional<unsigned> BiPoly::homogeneous_degree() const {
  if (terms_.empty()) return 0u;
  unsigned d = terms_.begin()->first.first + terms_.begin()->first.second;
  for (const auto& [key, c] : terms_)
    if (key.first + key.second != d) return std::nullopt;
  return d;
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    bool negative = c.sign() < 0;
    Rational mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    if (key.first > 0) {
      mono += "a";
      if (key.first > 1) mono += "^" + std::to_string(key.first);
    }
    if (key.second > 0) {
      if (!mono.empty()) mono += "*";
      mono += "b";
      if (key.second > 1) mono += "^" + std::to_string(key.second);
    }
    if (mono.empty()) {
      out += mag.str();
      continue;
    }
    if (mag.num() != 1) out += mag.num().get_str() + "*";
    out += mono;
    if (mag.den() != 1) out += "/" + mag.den().get_str();
  }
  return out;
}

}  // namespace leib

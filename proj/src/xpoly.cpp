#include "jfrac/xpoly.hpp"

#include <stdexcept>

namespace jfrac {

namespace {

Rational magnitude(const Rational& r) { return r.is_negative() ? -r : r; }

}  // namespace

Rational XPoly::eval(const Rational& x0) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x0 + *it;
  return acc;
}

XPoly XPoly::operator-() const {
  XPoly out(*this);
  for (auto& c : out.c_) c = -c;
  return out;
}

XPoly& XPoly::operator+=(const XPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  normalize();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  normalize();
  return *this;
}

XPoly& XPoly::operator*=(const XPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> prod(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(prod);
  normalize();
  return *this;
}

XPoly& XPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

std::string XPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    const bool neg = c.is_negative();
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    const Rational mag = magnitude(c);
    if (k == 0) {
      out += mag.to_string();
    } else {
      if (mag != Rational(1)) out += mag.to_string() + "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::optional<XPoly> try_divide(const XPoly& num, const XPoly& den) {
  if (den.is_zero()) throw std::domain_error("XPoly: division by zero polynomial");
  if (num.is_zero()) return XPoly();
  const int dn = num.degree();
  const int dd = den.degree();
  if (dn < dd) return std::nullopt;

  std::vector<Rational> rem = num.coeffs();
  std::vector<Rational> quot(static_cast<size_t>(dn - dd) + 1, Rational(0));
  const Rational lead = den.coeff(dd);
  for (int k = dn - dd; k >= 0; --k) {
    Rational q = rem[static_cast<size_t>(k + dd)] / lead;
    quot[static_cast<size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(k + j)] -= q * den.coeff(j);
  }
  for (int j = 0; j < dd; ++j) {
    if (!rem[static_cast<size_t>(j)].is_zero()) return std::nullopt;
  }
  return XPoly(std::move(quot));
}

XPoly binomial_in_x(long shift, int n) {
  if (n < 0) return XPoly();
  XPoly out(1);
  BigInt fact = 1;
  for (int j = 0; j < n; ++j) {
    out *= XPoly::linear(Rational(shift - j));
    fact *= j + 1;
  }
  return out * Rational(BigInt(1), fact);
}

}  // namespace jfrac

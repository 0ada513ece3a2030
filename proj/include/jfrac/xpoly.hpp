#pragma once

#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "jfrac/rational.hpp"

namespace jfrac {

/// Dense univariate polynomial in x over Rational.
///
/// Coefficients are stored low power first and are normalized eagerly:
/// no trailing zero coefficients, so the zero polynomial has an empty
/// coefficient vector and degree() == -1.  Equality is structural,
/// which the normalization invariant makes semantically exact.
class XPoly {
 public:
  XPoly() = default;
  XPoly(const Rational& c) { if (!c.is_zero()) c_.assign(1, c); }
  XPoly(int c) : XPoly(Rational(c)) {}
  XPoly(long c) : XPoly(Rational(c)) {}
  explicit XPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
  XPoly(std::initializer_list<Rational> coeffs)
      : c_(coeffs.begin(), coeffs.end()) { normalize(); }

  /// The monomial x.
  static XPoly variable() { return XPoly({Rational(0), Rational(1)}); }
  /// The linear polynomial x + a.
  static XPoly linear(const Rational& a) { return XPoly({a, Rational(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of x^k (zero outside the stored range).
  Rational coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(k)];
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  /// Horner evaluation at an exact rational point.
  Rational eval(const Rational& x0) const;
  /// Horner evaluation at an integer point.
  Rational eval_int(const BigInt& x0) const { return eval(Rational(x0)); }

  XPoly operator-() const;
  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  XPoly& operator*=(const XPoly& o);
  XPoly& operator*=(const Rational& s);

  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(XPoly a, const XPoly& b) { return a *= b; }
  friend XPoly operator*(XPoly a, const Rational& s) { return a *= s; }
  friend XPoly operator*(const Rational& s, XPoly a) { return a *= s; }

  friend bool operator==(const XPoly& a, const XPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }

  /// Canonical text form: terms in increasing power, exact rational
  /// coefficients, e.g. "4/3 + 2/3*x", "-1 - x", "x^2".  Zero is "0".
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const XPoly& p) {
    return os << p.to_string();
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;  // c_[k] multiplies x^k
};

/// Exact polynomial division: returns num / den when the division
/// leaves no remainder, std::nullopt otherwise.  Throws
/// std::domain_error for a zero divisor.
std::optional<XPoly> try_divide(const XPoly& num, const XPoly& den);

/// The polynomial C(x + shift, n) = (x+shift)(x+shift-1)...(x+shift-n+1) / n!,
/// expanded in the monomial basis.  n < 0 yields the zero polynomial.
XPoly binomial_in_x(long shift, int n);

}  // namespace jfrac

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "jfrac/xpoly.hpp"

namespace jfrac {

/// Dense polynomial in z whose coefficients are XPoly values.
///
/// Same normalization discipline as XPoly: no trailing zero
/// coefficients, zero polynomial has degree -1, equality is structural.
class ZPoly {
 public:
  ZPoly() = default;
  ZPoly(const XPoly& c) { if (!c.is_zero()) c_.assign(1, c); }
  ZPoly(const Rational& c) : ZPoly(XPoly(c)) {}
  ZPoly(int c) : ZPoly(XPoly(c)) {}
  explicit ZPoly(std::vector<XPoly> coeffs) : c_(std::move(coeffs)) { normalize(); }

  /// The monomial z.
  static ZPoly z() { return ZPoly(std::vector<XPoly>{XPoly(0), XPoly(1)}); }
  /// The monomial c * z^k.
  static ZPoly monomial(const XPoly& c, int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of z^k (zero outside the stored range).
  XPoly coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return XPoly();
    return c_[static_cast<size_t>(k)];
  }
  const std::vector<XPoly>& coeffs() const { return c_; }

  ZPoly operator-() const;
  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  ZPoly& operator*=(const ZPoly& o);
  /// Scale every coefficient by an XPoly factor.
  ZPoly& operator*=(const XPoly& s);
  ZPoly& operator*=(const Rational& s) { return *this *= XPoly(s); }

  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(ZPoly a, const ZPoly& b) { return a *= b; }
  friend ZPoly operator*(ZPoly a, const XPoly& s) { return a *= s; }
  friend ZPoly operator*(const XPoly& s, ZPoly a) { return a *= s; }

  /// The substitution z -> -z (negates every odd-power coefficient).
  ZPoly with_negated_z() const;

  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

  /// Canonical text form: terms in increasing z power with XPoly
  /// coefficients rendered inline, e.g. "1 + (1 + x)*z", "1 - x*z",
  /// "1 - 1/3*z^2".  Multi-term coefficients are parenthesized;
  /// single-term coefficients hoist their sign onto the joiner.
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const ZPoly& p) {
    return os << p.to_string();
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<XPoly> c_;  // c_[k] multiplies z^k
};

/// Leading coefficients of a formal power series in z over XPoly.
/// coeffs[n] is the coefficient of z^n for 0 <= n <= order(); the
/// vector always holds order()+1 entries.
struct TruncatedSeries {
  std::vector<XPoly> coeffs;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  XPoly coeff(int n) const {
    if (n < 0 || n > order()) return XPoly();
    return coeffs[static_cast<size_t>(n)];
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs == b.coeffs;
  }
};

/// The series 1 / q through order n_terms inclusive (n_terms + 1
/// coefficients), for a ZPoly q whose constant term is exactly 1.  Any
/// other constant term is rejected with std::invalid_argument (the
/// series inverse either would not exist or would break the intended
/// normalization).
TruncatedSeries series_inverse(const ZPoly& q, int n_terms);

}  // namespace jfrac

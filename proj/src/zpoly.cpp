#include "jfrac/zpoly.hpp"

#include <stdexcept>

namespace jfrac {

namespace {

// The unique nonzero term of a single-term XPoly, as (power, value).
// Only valid when the polynomial has exactly one nonzero coefficient.
struct Monomial {
  int power = 0;
  Rational value;
};

bool single_term(const XPoly& p, Monomial* m) {
  int count = 0;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k).is_zero()) continue;
    ++count;
    if (count > 1) return false;
    m->power = k;
    m->value = p.coeff(k);
  }
  return count == 1;
}

std::string z_power(int k) {
  return k == 1 ? "z" : "z^" + std::to_string(k);
}

}  // namespace

ZPoly ZPoly::monomial(const XPoly& c, int k) {
  if (c.is_zero()) return ZPoly();
  std::vector<XPoly> coeffs(static_cast<size_t>(k) + 1);
  coeffs.back() = c;
  return ZPoly(std::move(coeffs));
}

ZPoly ZPoly::operator-() const {
  ZPoly out(*this);
  for (auto& c : out.c_) c = -c;
  return out;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  normalize();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  normalize();
  return *this;
}

ZPoly& ZPoly::operator*=(const ZPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<XPoly> prod(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(prod);
  normalize();
  return *this;
}

ZPoly& ZPoly::operator*=(const XPoly& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

ZPoly ZPoly::with_negated_z() const {
  ZPoly out(*this);
  for (size_t k = 1; k < out.c_.size(); k += 2) out.c_[k] = -out.c_[k];
  return out;
}

std::string ZPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    const XPoly c = coeff(k);
    if (c.is_zero()) continue;
    if (k == 0) {
      out += c.to_string();
      first = false;
      continue;
    }
    Monomial m;
    if (single_term(c, &m)) {
      // Hoist the sign of a single-term coefficient onto the joiner.
      const bool neg = m.value.is_negative();
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      const Rational mag = neg ? -m.value : m.value;
      if (m.power == 0) {
        if (mag != Rational(1)) out += mag.to_string() + "*";
      } else {
        if (mag != Rational(1)) out += mag.to_string() + "*";
        out += "x";
        if (m.power > 1) out += "^" + std::to_string(m.power);
        out += "*";
      }
      out += z_power(k);
    } else {
      if (!first) out += " + ";
      first = false;
      out += "(" + c.to_string() + ")*" + z_power(k);
    }
  }
  return out;
}

TruncatedSeries series_inverse(const ZPoly& q, int n_terms) {
  if (n_terms < 0) throw std::invalid_argument("series_inverse: negative term count");
  if (q.coeff(0) != XPoly(1)) {
    throw std::invalid_argument(
        "series_inverse: constant term must be exactly 1, got " +
        q.coeff(0).to_string());
  }
  TruncatedSeries s;
  s.coeffs.resize(static_cast<size_t>(n_terms) + 1);
  const int dq = q.degree();
  for (int n = 0; n <= n_terms; ++n) {
    if (n == 0) {
      s.coeffs[0] = XPoly(1);
      continue;
    }
    XPoly acc;
    const int top = dq < n ? dq : n;
    for (int i = 1; i <= top; ++i) acc += q.coeff(i) * s.coeffs[static_cast<size_t>(n - i)];
    s.coeffs[static_cast<size_t>(n)] = -acc;
  }
  return s;
}

}  // namespace jfrac

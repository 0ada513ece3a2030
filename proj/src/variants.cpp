#include "jfrac/variants.hpp"

#include <stdexcept>

namespace jfrac {

// The falling factorial runs through zero for i > h, so the weight
// vanishes there without a special case.
Rational denominator_weight(int h, int i) {
  Rational w(1);
  for (int t = 0; t < i; ++t) w *= Rational(h - t, 2L * h - 1 - t);
  return w;
}

Rational numerator_weight(int h, int n) {
  return integer_binomial(BigInt(h - 1), n) / integer_binomial(BigInt(2L * h - 1), n);
}

Variant variant_from_int(int v) {
  if (v == 1) return Variant::x_plus_n;
  if (v == 2) return Variant::x_choose_n;
  throw std::invalid_argument("variant must be 1 or 2");
}

XPoly component_c(Variant v, int i) {
  if (i < 1) throw std::invalid_argument("component_c: i must be >= 1");
  const long d = (2L * i - 1) * (2L * i - 3);
  if (v == Variant::x_plus_n) {
    // (x - (1 + 2(i-2)i)) / d
    return XPoly({Rational(-(1 + 2L * (i - 2) * i), d), Rational(1, d)});
  }
  // (-x - 2(i-1)^2) / d
  return XPoly({Rational(-2L * (i - 1) * (i - 1), d), Rational(-1, d)});
}

XPoly component_ab(int i) {
  if (i < 1) throw std::invalid_argument("component_ab: i must be >= 1");
  if (i == 1) return XPoly();
  if (i == 2) {
    return XPoly::variable() * XPoly::linear(Rational(1)) * Rational(-1, 2);
  }
  const long d = 4L * (2 * i - 3) * (2 * i - 3);
  return XPoly::linear(Rational(2L - i)) * XPoly::linear(Rational(i - 1L)) * Rational(-1, d);
}

ComponentSequence component_sequence(Variant v) {
  ComponentSequence seq;
  seq.c = [v](int i) { return component_c(v, i); };
  seq.ab = [](int i) { return component_ab(i); };
  return seq;
}

ZPoly numerator_closed(Variant v, int h) {
  if (h < 0) throw std::invalid_argument("numerator_closed: h must be >= 0");
  if (h == 0) return ZPoly();
  std::vector<XPoly> coeffs(static_cast<size_t>(h));
  for (int n = 0; n < h; ++n) {
    XPoly body = (v == Variant::x_plus_n) ? binomial_in_x(n - h, n)
                                          : binomial_in_x(h, n);
    Rational scale = numerator_weight(h, n);
    if (v == Variant::x_plus_n && (n % 2) == 1) scale = -scale;
    coeffs[static_cast<size_t>(n)] = body * scale;
  }
  return ZPoly(std::move(coeffs));
}

ZPoly denominator_closed(Variant v, int h) {
  if (h < 0) throw std::invalid_argument("denominator_closed: h must be >= 0");
  if (h == 0) return ZPoly(XPoly(1));
  std::vector<XPoly> coeffs(static_cast<size_t>(h) + 1);
  for (int i = 0; i <= h; ++i) {
    XPoly body = (v == Variant::x_plus_n) ? binomial_in_x(h, i)
                                          : binomial_in_x(i - h, i);
    Rational scale = denominator_weight(h, i);
    if (v == Variant::x_choose_n && (i % 2) == 1) scale = -scale;
    coeffs[static_cast<size_t>(i)] = body * scale;
  }
  return ZPoly(std::move(coeffs));
}

XPoly lambda_poly(int h) {
  if (h < 1) throw std::invalid_argument("lambda_poly: h must be >= 1");
  if (h == 1) return XPoly(1);
  const Rational denom = integer_binomial(BigInt(2L * h - 3), h - 2);
  Rational scale = Rational(1, 2) / (denom * denom);
  if ((h - 1) % 2 == 1) scale = -scale;
  return binomial_in_x(h - 1, h - 1) * binomial_in_x(0, h - 1) * scale;
}

XPoly k_coeff(Variant v, int r, int s) {
  if (r < 0 || s < 0) throw std::invalid_argument("k_coeff: indices must be >= 0");
  if (r > s) return XPoly();
  const Rational scale =
      integer_binomial(BigInt(2L * r), r) / integer_binomial(BigInt(r + s), r);
  if (v == Variant::x_plus_n) {
    XPoly body = binomial_in_x(s, s - r) * scale;
    return ((s - r) % 2 == 1) ? -body : body;
  }
  return binomial_in_x(-r, s - r) * scale;
}

}  // namespace jfrac

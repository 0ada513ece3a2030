#pragma once

#include "jfrac/jfraction.hpp"

namespace jfrac {

/// Which binomial family the continued fraction generates.
enum class Variant : int {
  /// Convergents of this sequence, expanded at -z, generate C(x+n, n).
  x_plus_n = 1,
  /// Convergents of this sequence generate C(x, n).
  x_choose_n = 2,
};

/// Maps the CLI encoding 1/2 to a Variant; anything else throws
/// std::invalid_argument.
Variant variant_from_int(int v);
inline int variant_to_int(Variant v) { return static_cast<int>(v); }

/// Linear component c_i (i >= 1):
///   variant 1:  c_i = -(1 + 2(i-2)i - x) / ((2i-1)(2i-3))
///   variant 2:  c_i = -(x + 2(i-1)^2) / ((2i-1)(2i-3))
/// In particular c_1 = -(x+1) for variant 1 and c_1 = x for variant 2.
XPoly component_c(Variant v, int i);

/// Quadratic component ab_i (i >= 1), identical for both variants:
///   ab_1 = 0,  ab_2 = -x(x+1)/2,
///   ab_i = -(x-i+2)(x+i-1) / (4 (2i-3)^2)   for i >= 3.
XPoly component_ab(int i);

/// Both components bundled for the convergent recurrence.
ComponentSequence component_sequence(Variant v);

/// The scalar h!/(h-i)! * (2h-1-i)!/(2h-1)! = prod_{t<i} (h-t)/(2h-1-t)
/// weighting the i-th denominator coefficient (and, with h = n, the
/// terms of the exact finite sums).  Vanishes for i > h.
Rational denominator_weight(int h, int i);

/// The scalar C(h-1, n) / C(2h-1, n) weighting the n-th numerator
/// coefficient.  Requires n <= 2h-1 (the reciprocal exists).
Rational numerator_weight(int h, int n);

/// Closed-form numerator of the h-th convergent:
///   variant 1:  sum_{n<h} C(x+n-h, n)  C(h-1, n) / C(2h-1, n) (-z)^n
///   variant 2:  sum_{n<h} C(x+h, n)    C(h-1, n) / C(2h-1, n)   z^n
/// with numerator 0 for h = 0.
ZPoly numerator_closed(Variant v, int h);

/// Closed-form denominator of the h-th convergent:
///   variant 1:  sum_{i<=h} C(x+h, i)   [h!/(h-i)!] [(2h-1-i)!/(2h-1)!]   z^i
///   variant 2:  sum_{i<=h} C(x-h+i, i) [h!/(h-i)!] [(2h-1-i)!/(2h-1)!] (-z)^i
/// with denominator 1 for h = 0 (the factorial form above is undefined
/// there and is special-cased).
ZPoly denominator_closed(Variant v, int h);

/// lambda_h(x) = ab_2 ab_3 ... ab_h in closed form:
///   (-1)^(h-1)/2 * C(x+h-1, h-1) C(x, h-1) / C(2h-3, h-2)^2,  h >= 2,
/// and lambda_1 = 1 (empty product).  Requires h >= 1.
XPoly lambda_poly(int h);

/// Addition-formula expansion coefficient (zero when r > s):
///   variant 1:  k_{r,s} = (-1)^(s-r) C(x+s, s-r) C(2r, r) / C(s+r, r)
///   variant 2:  k_{r,s} =            C(x-r, s-r) C(2r, r) / C(r+s, r)
/// Requires r, s >= 0.
XPoly k_coeff(Variant v, int r, int s);

}  // namespace jfrac

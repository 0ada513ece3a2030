#pragma once

#include <functional>
#include <mutex>
#include <vector>

#include "jfrac/zpoly.hpp"

namespace jfrac {

/// The two coefficient streams defining a J-type continued fraction
///
///   1 / (1 - c_1 z - ab_2 z^2 / (1 - c_2 z - ab_3 z^2 / (...)))
///
/// indexed from i = 1.  ab(1) is never consumed by the convergent
/// recurrence and is conventionally the zero polynomial.
struct ComponentSequence {
  std::function<XPoly(int)> c;
  std::function<XPoly(int)> ab;
};

/// Numerator/denominator pair of the h-th convergent p/q.  For the
/// sequences used in this project deg_z p = h - 1, deg_z q = h, and q
/// has constant term 1.
struct ConvergentPair {
  int h = 0;
  ZPoly p;
  ZPoly q;
};

/// h-th convergent via the three-term recurrence
///
///   X_i = (1 - c_i z) X_{i-1} - ab_i z^2 X_{i-2},   i >= 2,
///
/// with bases P_0 = 0, P_1 = 1 and Q_0 = 1, Q_1 = 1 - c_1 z.
/// Requires h >= 0.
ConvergentPair convergent(const ComponentSequence& seq, int h);

/// The product ab_from ab_{from+1} ... ab_to.  Requires 1 <= from <= to.
/// With from = 2 this is the modulus lambda_h(x) = ab_2 ... ab_h.
XPoly modulus_product(const ComponentSequence& seq, int from, int to);

/// Checks the determinant identity
///   P_h Q_{h-1} - P_{h-1} Q_h == (ab_2 ... ab_h) z^(2h-2)
/// by exact structural comparison.  Requires h >= 1.  The signed ab
/// values already carry the alternating sign sometimes written as a
/// separate (-1)^(h-1) factor in front of their magnitudes; expanding
/// the tabulated convergents confirms this orientation (e.g. h = 2
/// gives cross-term -x(x+1)/2 z^2 = ab_2 z^2).
bool telescope_check(const ComponentSequence& seq, int h);

/// Power-series coefficients of p/q through order n_terms inclusive
/// (n_terms + 1 coefficients); of p(-z)/q(-z) when negate_z is set.
/// Requires q(0) = 1.
TruncatedSeries expand(const ConvergentPair& conv, int n_terms, bool negate_z);

/// Thread-safe memo of the convergents of one component sequence.
/// The table grows bottom-up on demand; lookups copy the cached pair
/// out under the lock, so returned values are safe to use while other
/// threads extend the table.
class ConvergentTable {
 public:
  explicit ConvergentTable(ComponentSequence seq);

  ConvergentPair get(int h);

 private:
  ComponentSequence seq_;
  std::vector<ZPoly> p_, q_;  // index = convergent subscript
  std::mutex mu_;
};

}  // namespace jfrac

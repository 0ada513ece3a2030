#include "jfrac/congruences.hpp"

#include <algorithm>
#include <stdexcept>

namespace jfrac {

namespace {

BigInt int_binom(const BigInt& top, long k) {
  return integer_binomial(top, k).to_integer();
}

long residue(const BigInt& value, int h) {
  BigInt r = ((value % h) + h) % h;
  return r.get_si();
}

// Shared input checks for the congruence/conjecture entry points.
void require_modulus(int h, const char* who) {
  if (h < 2) {
    throw std::invalid_argument(std::string(who) + ": h must be >= 2");
  }
}

// The fixed-level conjectured right side, exactly.  Variant 1:
//   sum_{i=1}^{h} binom(x+h,i) binom(x+n-i,n-i) w(h,i) (-1)^{i+1} + [n=0],
// variant 2:
//   sum_{i=1}^{h} binom(x-h+i,i) binom(x,n-i) w(h,i) (-1)^{i+1}
//     + binom(x+h,n) binom(h-1,n) / binom(2h-1,n)  (term live for n <= h-1).
Rational conjecture_general_rhs(Variant v, int h, long x0, long n) {
  Rational rhs(0);
  long i_hi = std::min<long>(h, n);
  for (long i = 1; i <= i_hi; ++i) {
    Rational term =
        v == Variant::x_plus_n
            ? Rational(int_binom(BigInt(x0 + h), i) *
                       int_binom(BigInt(x0 + n - i), n - i))
            : Rational(int_binom(BigInt(x0 - h + i), i) *
                       int_binom(BigInt(x0), n - i));
    term *= denominator_weight(h, static_cast<int>(i));
    if (i % 2 == 0) term = -term;
    rhs += term;
  }
  if (v == Variant::x_plus_n) {
    if (n == 0) rhs += Rational(1);
  } else if (n <= h - 1) {
    rhs += Rational(int_binom(BigInt(x0 + h), n)) *
           numerator_weight(h, static_cast<int>(n));
  }
  return rhs;
}

// The expanded per-modulus tables for h = 2..5, kept exactly as
// transcribed.  Term i of the sum is scale[i-1] times a falling product
// of i linear factors starting at x+h (variant 1) or x+i-h (variant 2);
// the variant-2 tail carries a polynomial-in-n prefactor on binom(x+h,n),
// live for n <= h-1.  Two entries are known to disagree with the general
// sum: the variant-1 h=5 scale -5/56 (the general sum gives -5/36) and
// the sign of the variant-2 h=5 last scale.
const std::vector<Rational>& display_scales(Variant v, int h) {
  static const std::vector<std::vector<Rational>> v1 = {
      {{2, 3}, {-1, 6}},
      {{3, 5}, {-3, 20}, {1, 60}},
      {{4, 7}, {-1, 7}, {2, 105}, {-1, 840}},
      {{5, 9}, {-5, 56}, {5, 252}, {-5, 3024}, {1, 15120}},
  };
  static const std::vector<std::vector<Rational>> v2 = {
      {{2, 3}, {-1, 6}},
      {{3, 5}, {-3, 20}, {1, 60}},
      {{4, 7}, {-1, 7}, {2, 105}, {-1, 840}},
      {{5, 9}, {-5, 36}, {5, 252}, {-5, 3024}, {-1, 15120}},
  };
  return (v == Variant::x_plus_n ? v1 : v2)[static_cast<size_t>(h - 2)];
}

Rational conjecture_display_rhs(Variant v, int h, long x0, long n) {
  const std::vector<Rational>& scales = display_scales(v, h);
  Rational rhs(0);
  long i_hi = std::min<long>(h, n);
  for (long i = 1; i <= i_hi; ++i) {
    // Falling product of i factors: (x+h)...(x+h-i+1) for variant 1,
    // (x+i-h)...(x-h+1) for variant 2, evaluated at x0.
    long top = v == Variant::x_plus_n ? x0 + h : x0 + i - h;
    Rational product(1);
    for (long j = 0; j < i; ++j) product *= Rational(BigInt(top - j));
    Rational paired =
        v == Variant::x_plus_n
            ? Rational(int_binom(BigInt(x0 + n - i), n - i))
            : Rational(int_binom(BigInt(x0), n - i));
    rhs += scales[static_cast<size_t>(i - 1)] * product * paired;
  }
  if (v == Variant::x_plus_n) {
    if (n == 0) rhs += Rational(1);
  } else if (n <= h - 1) {
    // Tail prefactors as tabulated: (n-2)(n-3)/6, -(n-3)(n-4)(n-5)/60,
    // (n-4)...(n-7)/840, -(n-5)...(n-9)/15120.
    static const Rational tail_scale[] = {
        {1, 6}, {-1, 60}, {1, 840}, {-1, 15120}};
    Rational pref = tail_scale[h - 2];
    for (long j = 0; j < h; ++j) pref *= Rational(BigInt(n - h - j));
    rhs += pref * Rational(int_binom(BigInt(x0 + h), n));
  }
  return rhs;
}

}  // namespace

Rational lambda_at(int h, long x0) {
  require_modulus(h, "lambda_at");
  ComponentSequence seq = component_sequence(Variant::x_plus_n);
  Rational point{BigInt(x0)};
  Rational out(1);
  for (int i = 2; i <= h; ++i) out *= seq.ab(i).eval(point);
  return out;
}

std::vector<AdmissibleModulus> find_admissible_detailed(int h, long x0,
                                                        int m_max) {
  require_modulus(h, "find_admissible");
  if (m_max < h) {
    throw std::invalid_argument("find_admissible: m_max must be >= h");
  }
  ComponentSequence seq = component_sequence(Variant::x_plus_n);
  Rational point{BigInt(x0)};
  Rational acc(1);
  std::vector<AdmissibleModulus> out;
  for (int m = 2; m <= m_max; ++m) {
    acc *= seq.ab(m).eval(point);
    if (m < h || !acc.is_integer()) continue;
    if (acc.to_integer() % h != 0) continue;
    out.push_back({m, acc, acc.is_zero()});
  }
  return out;
}

std::vector<int> find_admissible(int h, long x0, int m_max) {
  std::vector<int> out;
  for (const AdmissibleModulus& a : find_admissible_detailed(h, x0, m_max)) {
    out.push_back(a.m);
  }
  return out;
}

CongruenceCase congruence_check(Variant v, int h, int m, long x0, long n) {
  require_modulus(h, "congruence_check");
  if (m < h) throw std::invalid_argument("congruence_check: m must be >= h");
  if (x0 < 0 || n < 0) {
    throw std::invalid_argument("congruence_check: x and n must be >= 0");
  }
  CongruenceCase cs;
  cs.variant = variant_to_int(v);
  cs.h = h;
  cs.m = m;
  cs.x = x0;
  cs.n = n;
  cs.lambda = lambda_at(m, x0);
  cs.degenerate = cs.lambda.is_zero();
  cs.admissible =
      cs.lambda.is_integer() && cs.lambda.to_integer() % h == 0;
  cs.within_hypothesis = x0 <= h;
  cs.lhs = v == Variant::x_plus_n ? int_binom(BigInt(x0 + n), n)
                                  : int_binom(BigInt(x0), n);
  // Level-m sum: the weight vanishes for i > m and the paired binomial
  // for i > n, so the loop stops at min(m, n).
  Rational rhs(0);
  long i_hi = std::min<long>(m, n);
  for (long i = 1; i <= i_hi; ++i) {
    Rational term =
        v == Variant::x_plus_n
            ? Rational(int_binom(BigInt(x0 + m), i) *
                       int_binom(BigInt(x0 + n - i), n - i))
            : Rational(int_binom(BigInt(x0 - m + i), i) *
                       int_binom(BigInt(x0), n - i));
    term *= denominator_weight(m, static_cast<int>(i));
    if (i % 2 == 0) term = -term;
    rhs += term;
  }
  if (n < m) {
    Rational tail = v == Variant::x_plus_n
                        ? Rational(int_binom(BigInt(x0 + n - m), n))
                        : Rational(int_binom(BigInt(x0 + m), n));
    rhs += tail * numerator_weight(m, static_cast<int>(n));
  }
  cs.rhs = rhs;
  cs.rhs_integral = rhs.is_integer();
  cs.lhs_mod = residue(cs.lhs, h);
  if (cs.rhs_integral) {
    cs.rhs_mod = residue(rhs.to_integer(), h);
    cs.holds = (*cs.rhs_mod == cs.lhs_mod);
  }
  return cs;
}

ConjectureReport conjecture_scan(Variant v, int h, long x_max, long n_max) {
  require_modulus(h, "conjecture_scan");
  ConjectureReport rep;
  rep.variant = variant_to_int(v);
  rep.h = h;
  rep.x_max = x_max;
  rep.n_max = n_max;
  rep.display_checked = h <= 5;
  long x_hi = x_max;
  long n_hi = n_max;
  if (v == Variant::x_plus_n) {
    x_hi = std::min<long>(x_max, h - 1);
    n_hi = std::min<long>(n_max, h - 1);
  }
  for (long x0 = 0; x0 <= x_hi; ++x0) {
    for (long n = 0; n <= n_hi; ++n) {
      ++rep.points;
      BigInt lhs = v == Variant::x_plus_n ? int_binom(BigInt(x0 + n), n)
                                          : int_binom(BigInt(x0), n);
      long lhs_mod = residue(lhs, h);
      auto judge = [&](const Rational& rhs,
                       std::vector<ConjectureFailure>& sink) {
        if (!rhs.is_integer()) {
          sink.push_back({x0, n, true});
        } else if (residue(rhs.to_integer(), h) != lhs_mod) {
          sink.push_back({x0, n, false});
        }
      };
      judge(conjecture_general_rhs(v, h, x0, n), rep.failures);
      if (rep.display_checked) {
        judge(conjecture_display_rhs(v, h, x0, n), rep.display_failures);
      }
    }
  }
  rep.pass_rate =
      rep.points == 0
          ? Rational(1)
          : Rational(BigInt(rep.points - static_cast<long>(rep.failures.size())),
                     BigInt(rep.points));
  return rep;
}

}  // namespace jfrac

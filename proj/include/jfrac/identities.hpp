#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jfrac/rational.hpp"
#include "jfrac/variants.hpp"
#include "jfrac/xpoly.hpp"

namespace jfrac {

/// Outcome of one structural identity check: both sides rendered
/// canonically plus the verdict.  holds is true exactly when the two
/// sides are the same polynomial.
struct IdentityReport {
  std::string identity_id;
  std::vector<std::pair<std::string, long>> params;
  bool holds = false;
  std::string lhs;
  std::string rhs;
};

/// binom(x+n,n) (variant 1) or binom(x,n) (variant 2) as a polynomial
/// in x.  Requires n >= 0.
XPoly binom_poly(Variant v, int n);

/// Coefficientwise check that the order-h convergent generates
/// binom_poly through z^n_max: variant 1 expanded at -z, variant 2 at z.
/// One report per coefficient; its "proven" parameter is 1 on the
/// n <= h range and 0 on the h < n < 2h range, which is checked all the
/// same but rests on weaker ground.  Requires h >= 2 and n_max <= 2h-1.
std::vector<IdentityReport> verify_enumeration(Variant v, int h, int n_max);

/// The level-n finite-sum representation of binom_poly(v, n): the
/// weighted alternating sum of binomial products, plus the unit
/// contribution at n = 0.  Requires n >= 0.
XPoly exact_sum(Variant v, int n);

/// Equality between the two closed forms for the n-th numerator
/// coefficient of the first variant: the direct signed product versus
/// the alternating convolution with the denominator coefficients.
/// Requires h >= 1 and 0 <= n <= h-1.
IdentityReport alt_coefficient_identity(int n, int h);

/// Coefficient n of the variant's generating expansion computed through
/// the order-h linear difference recurrence
///   a_k = p_k - sum_{i=1}^{min(k,h)} q_i a_{k-i}
/// (numerator term p_k present only for k < h), with p and q the closed
/// forms rather than the three-term recurrence output.  Requires h >= 2,
/// n >= 0.
XPoly finite_difference_coeff(Variant v, int h, int n);

/// sum_{k=0}^{n} binom(n,k)^2 (-1)^k k! (2n-1-k)! / (2n-1)!, which is
/// identically zero.  Requires n >= 1.
Rational hypergeometric_zero_sum(int n);

/// The order-reduction identity splitting binom(x+p+q,p+q) (variant 1,
/// left side carrying (-1)^{p+q}) or binom(x,p+q) (variant 2) into
/// k_{0,p}k_{0,q} + sum_{i=1}^{max(p,q)} lambda_{i+1} k_{i,p} k_{i,q}.
/// With signed_convention = false the first variant is checked with |k|
/// and the unsigned left side instead; the two forms are equivalent
/// because the k signs cancel in pairs.  Requires p, q >= 0.
IdentityReport addition_check(Variant v, int p, int q,
                              bool signed_convention = true);

/// k_{r,p} for the first variant rebuilt from the two ladder recurrences
///   kt_{1,p}   = (kt_{0,p+1} - c_1 kt_{0,p}) / ab_2
///   kt_{r+1,p} = (kt_{r,p+1} - kt_{r-1,p} - c_{r+1} kt_{r,p}) / ab_{r+2}
/// seeded by kt_{0,s} = (-1)^s binom(x+s,s), instead of from the closed
/// form.  Every ladder step divides by an ab polynomial and must divide
/// exactly; std::domain_error otherwise.  Requires p >= r >= 0.
XPoly ktilde_via_recurrence(int r, int p);

}  // namespace jfrac

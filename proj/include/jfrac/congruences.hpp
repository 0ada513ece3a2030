#pragma once

#include <optional>
#include <vector>

#include "jfrac/rational.hpp"
#include "jfrac/variants.hpp"

namespace jfrac {

/// Exact value of the level-h modulus product prod_{i=2}^{h} ab_i at the
/// integer point x0.  Requires h >= 2.
Rational lambda_at(int h, long x0);

/// One convergent level accepted by the admissibility search.
struct AdmissibleModulus {
  int m = 0;
  Rational lambda;          // exact modulus value at x0
  bool degenerate = false;  // lambda == 0, so divisibility holds vacuously
};

/// All m in [h, m_max] whose modulus value at x0 is an integer divisible
/// by h, with the zero (degenerate) levels flagged.  Requires h >= 2 and
/// m_max >= h.
std::vector<AdmissibleModulus> find_admissible_detailed(int h, long x0,
                                                        int m_max);

/// The accepted levels only, in increasing order.
std::vector<int> find_admissible(int h, long x0, int m_max);

/// One congruence instance, evaluated exactly and reduced mod h.
struct CongruenceCase {
  int variant = 1;
  int h = 2;  // modulus
  int m = 2;  // convergent level
  long x = 0;
  long n = 0;
  Rational lambda;                // modulus value at x
  bool admissible = false;        // lambda integral and divisible by h
  bool degenerate = false;        // lambda == 0
  bool within_hypothesis = true;  // 0 <= x <= h
  BigInt lhs;                     // exact binomial value
  Rational rhs;                   // exact sum value, possibly non-integral
  bool rhs_integral = false;
  long lhs_mod = 0;               // residue in [0, h)
  std::optional<long> rhs_mod;    // absent when rhs is not an integer
  bool holds = false;             // rhs integral and residues agree
};

/// Evaluates the level-m finite-sum representation of binom(x0+n,n)
/// (variant 1) or binom(x0,n) (variant 2) and compares residues mod h.
/// A non-integral right side marks the case inapplicable
/// (rhs_integral = false, holds = false) instead of being rounded.
/// Requires h >= 2, m >= h, x0 >= 0, n >= 0.
CongruenceCase congruence_check(Variant v, int h, int m, long x0, long n);

/// One failing grid point of a conjecture scan.
struct ConjectureFailure {
  long x = 0;
  long n = 0;
  bool non_integral = false;  // right side was not an integer
};

/// Scan outcome over the grid 0 <= x <= x_max, 0 <= n <= n_max.  The
/// first variant's congruence is stated only for x < h and n < h, so its
/// grid is clipped to that box.
struct ConjectureReport {
  int variant = 1;
  int h = 2;
  long x_max = 0;
  long n_max = 0;
  long points = 0;  // grid points actually evaluated
  std::vector<ConjectureFailure> failures;
  Rational pass_rate;  // (points - failures) / points; 1 on an empty grid
  // For 2 <= h <= 5 an expanded per-modulus form of the same sum exists
  // in tabulated shape; it is re-checked verbatim and its failures are
  // listed separately (the tables are kept exactly as transcribed, and
  // two of their coefficients disagree with the general sum).
  bool display_checked = false;
  std::vector<ConjectureFailure> display_failures;
};

/// Evaluates the conjectured fixed-level congruence mod h at every grid
/// point, exactly; failures are recorded, never extrapolated.  Purely
/// descriptive: a failing conjecture is a result, not an error.
/// Requires h >= 2.
ConjectureReport conjecture_scan(Variant v, int h, long x_max, long n_max);

}  // namespace jfrac

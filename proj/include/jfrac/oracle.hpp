#pragma once

#include <vector>

#include "jfrac/rational.hpp"

namespace jfrac {
namespace oracle {

// Ground-truth routines used to check the main code paths.  Everything
// here works in plain integers and deliberately never touches the
// polynomial or continued-fraction machinery.

/// C(top, k) by the stepwise multiplicative formula
/// r <- r * (top - i) / (i + 1), which stays integral at every step.
/// Negative top follows the falling-factorial convention
/// (e.g. C(-2, 3) = -4); k < 0 yields 0.
BigInt binom_int(const BigInt& top, long k);

/// Deterministic trial-division primality test for small moduli.
bool is_prime(long p);

/// C(n, k) mod p via the base-p digit product
///   C(n, k) == prod_i C(n_i, k_i)  (mod p),
/// for prime p and n, k >= 0.  Throws std::invalid_argument for
/// composite p or negative arguments.
long lucas_residue(long n, long k, long p);

/// First n_terms coefficients of the rational generating function the
/// convergents approximate, computed by repeated truncated
/// multiplication over plain BigInt (no polynomial classes):
///   variant 1 (x0 >= 0): 1 / (1 - z)^(x0+1)  =>  C(x0+n, n)
///   variant 2 (x0 >= 0): (1 + z)^x0          =>  C(x0, n)
std::vector<BigInt> ogf_coefficients(int variant, long x0, int n_terms);

/// True when ogf_coefficients(variant, x0, n_terms) matches
/// binom_int term by term.
bool ogf_cross_check(int variant, long x0, int n_terms);

}  // namespace oracle
}  // namespace jfrac

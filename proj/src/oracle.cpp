#include "jfrac/oracle.hpp"

#include <stdexcept>

namespace jfrac {
namespace oracle {

BigInt binom_int(const BigInt& top, long k) {
  if (k < 0) return BigInt(0);
  BigInt r = 1;
  for (long i = 0; i < k; ++i) {
    r *= top - i;
    // Products of i+1 consecutive integers are divisible by (i+1)!,
    // so this division is exact at every step.
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i + 1));
  }
  return r;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

long lucas_residue(long n, long k, long p) {
  if (!is_prime(p)) throw std::invalid_argument("lucas_residue: modulus must be prime");
  if (n < 0 || k < 0) throw std::invalid_argument("lucas_residue: arguments must be >= 0");
  long result = 1;
  while (n > 0 || k > 0) {
    const long nd = n % p;
    const long kd = k % p;
    if (kd > nd) return 0;
    // C(nd, kd) for digits < p fits comfortably in a long via the
    // running-product form.
    long digit_binom = 1;
    for (long i = 0; i < kd; ++i) digit_binom = digit_binom * (nd - i) / (i + 1);
    result = (result * (digit_binom % p)) % p;
    n /= p;
    k /= p;
  }
  return result;
}

std::vector<BigInt> ogf_coefficients(int variant, long x0, int n_terms) {
  if (variant != 1 && variant != 2) throw std::invalid_argument("variant must be 1 or 2");
  if (x0 < 0) throw std::invalid_argument("ogf_coefficients: x0 must be >= 0");
  if (n_terms < 0) throw std::invalid_argument("ogf_coefficients: n_terms must be >= 0");
  std::vector<BigInt> acc(static_cast<size_t>(n_terms), BigInt(0));
  if (n_terms == 0) return acc;
  acc[0] = 1;
  if (variant == 1) {
    // Multiply by 1/(1-z) = 1 + z + z^2 + ...  x0+1 times; one pass of
    // the truncated product is a running prefix sum.
    for (long rep = 0; rep <= x0; ++rep) {
      for (int n = 1; n < n_terms; ++n) {
        acc[static_cast<size_t>(n)] += acc[static_cast<size_t>(n - 1)];
      }
    }
  } else {
    // Multiply by (1+z) x0 times.
    for (long rep = 0; rep < x0; ++rep) {
      for (int n = n_terms - 1; n >= 1; --n) {
        acc[static_cast<size_t>(n)] += acc[static_cast<size_t>(n - 1)];
      }
    }
  }
  return acc;
}

bool ogf_cross_check(int variant, long x0, int n_terms) {
  const std::vector<BigInt> series = ogf_coefficients(variant, x0, n_terms);
  for (int n = 0; n < n_terms; ++n) {
    const BigInt expected = (variant == 1) ? binom_int(BigInt(x0 + n), n)
                                           : binom_int(BigInt(x0), n);
    if (series[static_cast<size_t>(n)] != expected) return false;
  }
  return true;
}

}  // namespace oracle
}  // namespace jfrac

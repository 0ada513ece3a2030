#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "jfrac/oracle.hpp"
#include "jfrac/rational.hpp"

using jfrac::BigInt;
using jfrac::Rational;
namespace oracle = jfrac::oracle;

TEST_CASE("integer binomial ground truth") {
  CHECK(oracle::binom_int(BigInt(5), 2) == BigInt(10));
  CHECK(oracle::binom_int(BigInt(0), 0) == BigInt(1));
  CHECK(oracle::binom_int(BigInt(4), 7) == BigInt(0));
  CHECK(oracle::binom_int(BigInt(-2), 3) == BigInt(-4));
  CHECK(oracle::binom_int(BigInt(3), -1) == BigInt(0));

  // Against the rational-arithmetic implementation used everywhere else.
  for (long top = -12; top <= 12; ++top) {
    for (long k = -2; k <= 14; ++k) {
      Rational viaRational = jfrac::integer_binomial(BigInt(top), k);
      REQUIRE(viaRational.is_integer());
      CHECK(oracle::binom_int(BigInt(top), k) == viaRational.to_integer());
    }
  }
}

TEST_CASE("primality for moduli") {
  CHECK(oracle::is_prime(2));
  CHECK(oracle::is_prime(3));
  CHECK(oracle::is_prime(97));
  CHECK_FALSE(oracle::is_prime(1));
  CHECK_FALSE(oracle::is_prime(0));
  CHECK_FALSE(oracle::is_prime(91));  // 7 * 13
}

TEST_CASE("digit-product residues match direct computation") {
  for (long p : {2L, 3L, 5L, 7L}) {
    for (long n = 0; n <= 60; ++n) {
      for (long k = 0; k <= n; ++k) {
        BigInt direct = oracle::binom_int(BigInt(n), k) % p;
        CHECK(oracle::lucas_residue(n, k, p) == direct.get_si());
      }
    }
  }
  CHECK(oracle::lucas_residue(10, 3, 2) == 0);
  CHECK(oracle::lucas_residue(7, 3, 2) == 1);  // all base-2 digits of 7 are 1
  CHECK_THROWS_AS(oracle::lucas_residue(10, 3, 6), std::invalid_argument);
  CHECK_THROWS_AS(oracle::lucas_residue(-1, 0, 3), std::invalid_argument);
}

TEST_CASE("generating-function coefficients") {
  std::vector<BigInt> v1 = oracle::ogf_coefficients(1, 3, 7);
  REQUIRE(v1.size() == 7);
  std::vector<long> expect1 = {1, 4, 10, 20, 35, 56, 84};
  for (size_t i = 0; i < v1.size(); ++i) {
    CHECK(v1[i] == BigInt(expect1[i]));
  }

  std::vector<BigInt> v2 = oracle::ogf_coefficients(2, 5, 9);
  REQUIRE(v2.size() == 9);
  std::vector<long> expect2 = {1, 5, 10, 10, 5, 1, 0, 0, 0};
  for (size_t i = 0; i < v2.size(); ++i) {
    CHECK(v2[i] == BigInt(expect2[i]));
  }

  CHECK_THROWS_AS(oracle::ogf_coefficients(3, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(oracle::ogf_coefficients(1, -1, 1), std::invalid_argument);
}

TEST_CASE("cross-checks between the two oracle routes") {
  for (int variant : {1, 2}) {
    for (long x0 = 0; x0 <= 10; ++x0) {
      CHECK(oracle::ogf_cross_check(variant, x0, 12));
    }
  }
}

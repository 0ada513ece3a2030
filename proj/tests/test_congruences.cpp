#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "jfrac/congruences.hpp"
#include "jfrac/serialize.hpp"
#include "jfrac/variants.hpp"

using jfrac::BigInt;
using jfrac::Rational;
using jfrac::Variant;

TEST_CASE("modulus level evaluation") {
  CHECK(jfrac::lambda_at(2, 2) == Rational(-3));
  CHECK(jfrac::lambda_at(3, 2) == Rational(1, 3));
  CHECK(jfrac::lambda_at(2, 0) == Rational(0));
  for (int h = 2; h <= 8; ++h) {
    jfrac::XPoly poly = jfrac::lambda_poly(h);
    for (long x0 = 0; x0 <= 8; ++x0) {
      CHECK(jfrac::lambda_at(h, x0) == poly.eval(Rational(x0)));
    }
  }
  CHECK_THROWS_AS(jfrac::lambda_at(1, 2), std::invalid_argument);
}

TEST_CASE("admissible level search") {
  CHECK(jfrac::find_admissible(3, 2, 3).empty());
  CHECK(jfrac::find_admissible(2, 0, 5) == std::vector<int>{2, 3, 4, 5});
  CHECK(jfrac::find_admissible(2, 3, 3) == std::vector<int>{2});

  std::vector<jfrac::AdmissibleModulus> zero_case =
      jfrac::find_admissible_detailed(2, 0, 5);
  REQUIRE(zero_case.size() == 4);
  for (const auto& a : zero_case) {
    CHECK(a.degenerate);
    CHECK(a.lambda.is_zero());
  }
  std::vector<jfrac::AdmissibleModulus> live_case =
      jfrac::find_admissible_detailed(2, 3, 3);
  REQUIRE(live_case.size() == 1);
  CHECK(live_case[0].m == 2);
  CHECK(live_case[0].lambda == Rational(-6));
  CHECK_FALSE(live_case[0].degenerate);

  CHECK_THROWS_AS(jfrac::find_admissible(3, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(jfrac::find_admissible(1, 2, 5), std::invalid_argument);
}

TEST_CASE("single congruence checks") {
  jfrac::CongruenceCase a =
      jfrac::congruence_check(Variant::x_plus_n, 3, 3, 2, 4);
  CHECK(a.lhs == BigInt(15));
  CHECK(a.rhs == Rational(15));
  CHECK(a.rhs_integral);
  CHECK(a.holds);
  CHECK_FALSE(a.admissible);  // lambda_3(2) = 1/3 is not an integer
  CHECK(a.within_hypothesis);
  CHECK(a.lambda == Rational(1, 3));

  jfrac::CongruenceCase b =
      jfrac::congruence_check(Variant::x_plus_n, 2, 2, 1, 0);
  CHECK(b.lhs == BigInt(1));
  CHECK(b.rhs == Rational(1));
  CHECK(b.holds);

  jfrac::CongruenceCase c =
      jfrac::congruence_check(Variant::x_choose_n, 3, 3, 2, 1);
  CHECK(c.lhs == BigInt(2));
  CHECK(c.rhs == Rational(2));
  CHECK(c.lhs_mod == 2);
  REQUIRE(c.rhs_mod.has_value());
  CHECK(*c.rhs_mod == 2);
  CHECK(c.holds);

  // Degenerate level: lambda vanishes at x = 0 yet the congruence is exact.
  jfrac::CongruenceCase d =
      jfrac::congruence_check(Variant::x_plus_n, 2, 2, 0, 5);
  CHECK(d.admissible);
  CHECK(d.degenerate);
  CHECK(d.within_hypothesis);
  CHECK(d.lhs == BigInt(1));
  CHECK(d.rhs == Rational(1));
  CHECK(d.holds);

  // A rational right-hand side marks the case inapplicable, never rounded.
  jfrac::CongruenceCase e =
      jfrac::congruence_check(Variant::x_plus_n, 2, 2, 2, 4);
  CHECK(e.lhs == BigInt(15));
  CHECK(e.rhs == Rational(44, 3));
  CHECK_FALSE(e.rhs_integral);
  CHECK_FALSE(e.rhs_mod.has_value());
  CHECK_FALSE(e.holds);
  CHECK_FALSE(e.admissible);

  // Admissible level outside the x-hypothesis with a non-integral value.
  jfrac::CongruenceCase f =
      jfrac::congruence_check(Variant::x_plus_n, 2, 2, 3, 4);
  CHECK(f.admissible);
  CHECK_FALSE(f.within_hypothesis);
  CHECK(f.rhs == Rational(100, 3));
  CHECK_FALSE(f.rhs_integral);
  CHECK_FALSE(f.holds);

  CHECK_THROWS_AS(jfrac::congruence_check(Variant::x_plus_n, 3, 2, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(jfrac::congruence_check(Variant::x_plus_n, 2, 2, -1, 1),
                  std::invalid_argument);
}

TEST_CASE("level-h scan, binomial shifted by n") {
  jfrac::ConjectureReport rep =
      jfrac::conjecture_scan(Variant::x_plus_n, 2, 1, 10);
  CHECK(rep.variant == 1);
  CHECK(rep.h == 2);
  // The grid is clipped to x, n <= h-1 for this variant.
  CHECK(rep.points == 4);
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.failures[0].x == 0);
  CHECK(rep.failures[0].n == 1);
  CHECK(rep.failures[0].non_integral);
  CHECK(rep.pass_rate == Rational(3, 4));
  CHECK(rep.display_checked);
  REQUIRE(rep.display_failures.size() == 1);
  CHECK(rep.display_failures[0].x == 0);
  CHECK(rep.display_failures[0].n == 1);
}

TEST_CASE("level-h scan, plain binomial") {
  jfrac::ConjectureReport rep =
      jfrac::conjecture_scan(Variant::x_choose_n, 3, 10, 10);
  CHECK(rep.variant == 2);
  CHECK(rep.points == 121);
  CHECK(rep.failures.size() == 21);
  CHECK(rep.pass_rate == Rational(100, 121));
  CHECK(rep.failures[0].x == 3);
  CHECK(rep.failures[0].n == 6);
  CHECK(rep.failures[0].non_integral);
  // The level-3 closed table matches the general form exactly, so the two
  // failure lists coincide.
  CHECK(rep.display_checked);
  CHECK(rep.display_failures.size() == rep.failures.size());

  // Determinism: repeated scans serialize to identical bytes.
  jfrac::ConjectureReport again =
      jfrac::conjecture_scan(Variant::x_choose_n, 3, 10, 10);
  CHECK(jfrac::to_json(rep).dump() == jfrac::to_json(again).dump());
}

TEST_CASE("level-5 closed table departs from the general form") {
  jfrac::ConjectureReport rep =
      jfrac::conjecture_scan(Variant::x_plus_n, 5, 25, 25);
  CHECK(rep.points == 25);  // clipped to the 5x5 corner
  CHECK(rep.failures.size() == 10);
  CHECK(rep.display_checked);
  // The transcribed level-5 table has a deviating coefficient, so its failure
  // list is strictly larger than the general one.
  CHECK(rep.display_failures.size() == 19);
}

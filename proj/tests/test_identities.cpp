#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "jfrac/identities.hpp"
#include "jfrac/jfraction.hpp"
#include "jfrac/variants.hpp"

using jfrac::Rational;
using jfrac::Variant;
using jfrac::XPoly;

namespace {

XPoly lin(long shift) { return XPoly::linear(Rational(shift)); }

}  // namespace

TEST_CASE("symbolic binomial targets") {
  CHECK(jfrac::binom_poly(Variant::x_plus_n, 0) == XPoly(1));
  CHECK(jfrac::binom_poly(Variant::x_plus_n, 2) ==
        lin(1) * lin(2) * Rational(1, 2));
  CHECK(jfrac::binom_poly(Variant::x_choose_n, 3) ==
        XPoly::variable() * lin(-1) * lin(-2) * Rational(1, 6));
  CHECK_THROWS_AS(jfrac::binom_poly(Variant::x_plus_n, -1),
                  std::invalid_argument);
}

TEST_CASE("enumeration through the convergents") {
  auto all_hold = [](const std::vector<jfrac::IdentityReport>& rs) {
    for (const auto& r : rs) {
      if (!r.holds) return false;
    }
    return true;
  };
  CHECK(all_hold(jfrac::verify_enumeration(Variant::x_plus_n, 4, 4)));
  CHECK(all_hold(jfrac::verify_enumeration(Variant::x_plus_n, 4, 7)));
  CHECK(all_hold(jfrac::verify_enumeration(Variant::x_choose_n, 2, 2)));

  // The h < n < 2h range is flagged as unproven, the rest as proven.
  std::vector<jfrac::IdentityReport> rs =
      jfrac::verify_enumeration(Variant::x_plus_n, 4, 7);
  REQUIRE(rs.size() == 8);
  for (int n = 0; n <= 7; ++n) {
    long proven = -1;
    for (const auto& [name, value] : rs[static_cast<size_t>(n)].params) {
      if (name == "proven") proven = value;
    }
    CHECK(proven == (n <= 4 ? 1 : 0));
  }

  CHECK_THROWS_AS(jfrac::verify_enumeration(Variant::x_plus_n, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(jfrac::verify_enumeration(Variant::x_plus_n, 4, 8),
                  std::invalid_argument);
}

TEST_CASE("exact finite sums") {
  CHECK(jfrac::exact_sum(Variant::x_plus_n, 0) == XPoly(1));
  CHECK(jfrac::exact_sum(Variant::x_plus_n, 1) == lin(1));
  CHECK(jfrac::exact_sum(Variant::x_choose_n, 2) ==
        XPoly::variable() * lin(-1) * Rational(1, 2));
  for (Variant v : {Variant::x_plus_n, Variant::x_choose_n}) {
    for (int n = 0; n <= 12; ++n) {
      CHECK(jfrac::exact_sum(v, n) == jfrac::binom_poly(v, n));
    }
  }
}

TEST_CASE("alternating coefficient identity") {
  CHECK(jfrac::alt_coefficient_identity(0, 3).holds);
  CHECK(jfrac::alt_coefficient_identity(1, 3).holds);
  CHECK(jfrac::alt_coefficient_identity(2, 5).holds);
  for (int h = 1; h <= 8; ++h) {
    for (int n = 0; n < h; ++n) {
      CHECK(jfrac::alt_coefficient_identity(n, h).holds);
    }
  }
  CHECK_THROWS_AS(jfrac::alt_coefficient_identity(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(jfrac::alt_coefficient_identity(-1, 3), std::invalid_argument);
}

TEST_CASE("difference-recurrence coefficients") {
  CHECK(jfrac::finite_difference_coeff(Variant::x_plus_n, 3, 0) == XPoly(1));
  CHECK(jfrac::finite_difference_coeff(Variant::x_plus_n, 3, 3) ==
        lin(1) * lin(2) * lin(3) * Rational(1, 6));
  // Against the series expansion, including past the order of contact.
  for (Variant v : {Variant::x_plus_n, Variant::x_choose_n}) {
    for (int h = 2; h <= 8; ++h) {
      jfrac::ConvergentPair conv =
          jfrac::convergent(jfrac::component_sequence(v), h);
      jfrac::TruncatedSeries s =
          jfrac::expand(conv, 2 * h, v == Variant::x_plus_n);
      for (int n = 0; n <= 2 * h; ++n) {
        CHECK(jfrac::finite_difference_coeff(v, h, n) == s.coeff(n));
      }
    }
  }
  CHECK_THROWS_AS(jfrac::finite_difference_coeff(Variant::x_plus_n, 1, 0),
                  std::invalid_argument);
}

TEST_CASE("hypergeometric zero-sum") {
  CHECK(jfrac::hypergeometric_zero_sum(1).is_zero());
  CHECK(jfrac::hypergeometric_zero_sum(2).is_zero());
  CHECK(jfrac::hypergeometric_zero_sum(50).is_zero());
  CHECK_THROWS_AS(jfrac::hypergeometric_zero_sum(0), std::invalid_argument);
}

TEST_CASE("addition formulas") {
  jfrac::IdentityReport unit =
      jfrac::addition_check(Variant::x_choose_n, 0, 0);
  CHECK(unit.holds);
  CHECK(unit.lhs == "1");
  CHECK(unit.rhs == "1");
  CHECK(jfrac::addition_check(Variant::x_plus_n, 1, 1).holds);
  CHECK(jfrac::addition_check(Variant::x_choose_n, 3, 2).holds);
  for (Variant v : {Variant::x_plus_n, Variant::x_choose_n}) {
    for (int p = 0; p <= 5; ++p) {
      for (int q = 0; q <= 5; ++q) {
        CHECK(jfrac::addition_check(v, p, q, true).holds);
        CHECK(jfrac::addition_check(v, p, q, false).holds);
      }
    }
  }
  CHECK_THROWS_AS(jfrac::addition_check(Variant::x_plus_n, -1, 0),
                  std::invalid_argument);
}

TEST_CASE("ladder recurrence for the reduction coefficients") {
  CHECK(jfrac::ktilde_via_recurrence(0, 2) ==
        lin(1) * lin(2) * Rational(1, 2));
  CHECK(jfrac::ktilde_via_recurrence(1, 1) == XPoly(1));
  // (1/2) binom(x+3,2) = (x+2)(x+3)/4.
  CHECK(jfrac::ktilde_via_recurrence(1, 3) == lin(2) * lin(3) * Rational(1, 4));
  for (int p = 0; p <= 6; ++p) {
    for (int r = 0; r <= p; ++r) {
      CHECK(jfrac::ktilde_via_recurrence(r, p) ==
            jfrac::k_coeff(Variant::x_plus_n, r, p));
    }
  }
  CHECK_THROWS_AS(jfrac::ktilde_via_recurrence(2, 1), std::invalid_argument);
}

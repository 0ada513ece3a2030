#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <thread>
#include <vector>

#include "jfrac/jfraction.hpp"
#include "jfrac/variants.hpp"

using jfrac::ComponentSequence;
using jfrac::ConvergentPair;
using jfrac::Rational;
using jfrac::Variant;
using jfrac::XPoly;
using jfrac::ZPoly;

TEST_CASE("convergent bases") {
  for (Variant v : {Variant::x_plus_n, Variant::x_choose_n}) {
    ComponentSequence seq = jfrac::component_sequence(v);
    ConvergentPair c0 = jfrac::convergent(seq, 0);
    CHECK(c0.p.is_zero());
    CHECK(c0.q == ZPoly(XPoly(1)));
    ConvergentPair c1 = jfrac::convergent(seq, 1);
    CHECK(c1.p == ZPoly(XPoly(1)));
    CHECK(c1.q == ZPoly(XPoly(1)) - ZPoly::monomial(seq.c(1), 1));
  }
  CHECK_THROWS_AS(
      jfrac::convergent(jfrac::component_sequence(Variant::x_plus_n), -1),
      std::invalid_argument);
}

TEST_CASE("three-term recurrence step") {
  // X_i = (1 - c_i z) X_{i-1} - ab_i z^2 X_{i-2}, checked at i = 2, 3.
  ComponentSequence seq = jfrac::component_sequence(Variant::x_plus_n);
  ConvergentPair c1 = jfrac::convergent(seq, 1);
  ConvergentPair c2 = jfrac::convergent(seq, 2);
  ConvergentPair c3 = jfrac::convergent(seq, 3);
  ZPoly one_minus_c2z = ZPoly(XPoly(1)) - ZPoly::monomial(seq.c(2), 1);
  ZPoly ab2_z2 = ZPoly::monomial(seq.ab(2), 2);
  CHECK(c2.q == one_minus_c2z * c1.q - ab2_z2 * ZPoly(XPoly(1)));
  CHECK(c2.p == one_minus_c2z * c1.p);  // P_0 = 0 kills the second term
  ZPoly one_minus_c3z = ZPoly(XPoly(1)) - ZPoly::monomial(seq.c(3), 1);
  ZPoly ab3_z2 = ZPoly::monomial(seq.ab(3), 2);
  CHECK(c3.q == one_minus_c3z * c2.q - ab3_z2 * c1.q);
  CHECK(c3.p == one_minus_c3z * c2.p - ab3_z2 * c1.p);
}

TEST_CASE("modulus product") {
  ComponentSequence seq = jfrac::component_sequence(Variant::x_plus_n);
  CHECK(jfrac::modulus_product(seq, 2, 2) == seq.ab(2));
  // ab_2 * ab_3 = x(x+1)(x-1)(x+2)/72.
  XPoly expected = XPoly::variable() * XPoly::linear(Rational(1)) *
                   XPoly::linear(Rational(-1)) * XPoly::linear(Rational(2)) *
                   Rational(1, 72);
  CHECK(jfrac::modulus_product(seq, 2, 3) == expected);
  CHECK_THROWS_AS(jfrac::modulus_product(seq, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(jfrac::modulus_product(seq, 3, 2), std::invalid_argument);
}

TEST_CASE("telescoping cross-term") {
  for (Variant v : {Variant::x_plus_n, Variant::x_choose_n}) {
    ComponentSequence seq = jfrac::component_sequence(v);
    for (int h = 1; h <= 6; ++h) CHECK(jfrac::telescope_check(seq, h));
  }
  // At h = 2 the cross-term is ab_2 z^2 = -x(x+1)/2 z^2 itself: the
  // product of signed ab factors needs no separate sign.
  ComponentSequence seq = jfrac::component_sequence(Variant::x_plus_n);
  ConvergentPair c1 = jfrac::convergent(seq, 1);
  ConvergentPair c2 = jfrac::convergent(seq, 2);
  ZPoly cross = c2.p * c1.q - c1.p * c2.q;
  CHECK(cross == ZPoly::monomial(seq.ab(2), 2));
  CHECK(seq.ab(2) ==
        XPoly::variable() * XPoly::linear(Rational(1)) * Rational(-1, 2));
}

TEST_CASE("series expansion of convergents") {
  ComponentSequence seq = jfrac::component_sequence(Variant::x_plus_n);
  ConvergentPair c3 = jfrac::convergent(seq, 3);
  jfrac::TruncatedSeries s = jfrac::expand(c3, 2, /*negate_z=*/true);
  REQUIRE(s.order() == 2);  // n_terms is an inclusive order
  CHECK(s.coeff(0) == XPoly(1));
  CHECK(s.coeff(1) == XPoly::linear(Rational(1)));
  CHECK(s.coeff(2) ==
        XPoly::linear(Rational(1)) * XPoly::linear(Rational(2)) * Rational(1, 2));
  CHECK_THROWS_AS(jfrac::expand(c3, -1, true), std::invalid_argument);

  // Without negation the odd coefficients flip sign.
  jfrac::TruncatedSeries plain = jfrac::expand(c3, 2, /*negate_z=*/false);
  CHECK(plain.coeff(1) == -XPoly::linear(Rational(1)));
  CHECK(plain.coeff(2) == s.coeff(2));
}

TEST_CASE("convergent table caches and matches") {
  jfrac::ConvergentTable table(jfrac::component_sequence(Variant::x_choose_n));
  for (int h : {5, 2, 7, 0, 5}) {
    ConvergentPair direct =
        jfrac::convergent(jfrac::component_sequence(Variant::x_choose_n), h);
    ConvergentPair cached = table.get(h);
    CHECK(cached.p == direct.p);
    CHECK(cached.q == direct.q);
  }
  // Concurrent access settles on the same values.
  jfrac::ConvergentTable shared(jfrac::component_sequence(Variant::x_plus_n));
  std::vector<std::thread> pool;
  std::vector<ZPoly> results(8);
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([&shared, &results, t] { results[static_cast<size_t>(t)] = shared.get(6).q; });
  }
  for (std::thread& th : pool) th.join();
  ZPoly direct = jfrac::convergent(jfrac::component_sequence(Variant::x_plus_n), 6).q;
  for (const ZPoly& r : results) CHECK(r == direct);
}

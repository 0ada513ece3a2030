#include "jfrac/identities.hpp"

#include <algorithm>
#include <stdexcept>

#include "jfrac/jfraction.hpp"

namespace jfrac {

namespace {

IdentityReport make_report(std::string id,
                           std::vector<std::pair<std::string, long>> params,
                           const XPoly& lhs, const XPoly& rhs) {
  IdentityReport r;
  r.identity_id = std::move(id);
  r.params = std::move(params);
  r.holds = (lhs == rhs);
  r.lhs = lhs.to_string();
  r.rhs = rhs.to_string();
  return r;
}

}  // namespace

XPoly binom_poly(Variant v, int n) {
  if (n < 0) throw std::invalid_argument("binom_poly: n must be >= 0");
  return v == Variant::x_plus_n ? binomial_in_x(n, n) : binomial_in_x(0, n);
}

std::vector<IdentityReport> verify_enumeration(Variant v, int h, int n_max) {
  if (h < 2) throw std::invalid_argument("verify_enumeration: h must be >= 2");
  if (n_max > 2 * h - 1) {
    throw std::invalid_argument("verify_enumeration: n_max must be <= 2h-1");
  }
  std::vector<IdentityReport> out;
  if (n_max < 0) return out;
  ConvergentPair conv = convergent(component_sequence(v), h);
  TruncatedSeries series = expand(conv, n_max, v == Variant::x_plus_n);
  for (int n = 0; n <= n_max; ++n) {
    out.push_back(make_report(
        "enumeration",
        {{"variant", variant_to_int(v)}, {"h", h}, {"n", n},
         {"proven", n <= h ? 1 : 0}},
        series.coeff(n), binom_poly(v, n)));
  }
  return out;
}

XPoly exact_sum(Variant v, int n) {
  if (n < 0) throw std::invalid_argument("exact_sum: n must be >= 0");
  XPoly total = n == 0 ? XPoly(1) : XPoly();
  for (int i = 1; i <= n; ++i) {
    XPoly term = v == Variant::x_plus_n
                     ? binomial_in_x(n, i) * binomial_in_x(n - i, n - i)
                     : binomial_in_x(i - n, i) * binomial_in_x(0, n - i);
    term *= denominator_weight(n, i);
    if (i % 2 == 0) term = -term;
    total += term;
  }
  return total;
}

IdentityReport alt_coefficient_identity(int n, int h) {
  if (h < 1) throw std::invalid_argument("alt_coefficient_identity: h must be >= 1");
  if (n < 0 || n > h - 1) {
    throw std::invalid_argument("alt_coefficient_identity: need 0 <= n <= h-1");
  }
  XPoly lhs = binomial_in_x(n - h, n) * numerator_weight(h, n);
  if (n % 2 != 0) lhs = -lhs;
  XPoly rhs;
  for (int i = 0; i <= n; ++i) {
    XPoly term = binomial_in_x(n - i, n - i) * binomial_in_x(h, i);
    term *= denominator_weight(h, i);
    if ((n - i) % 2 != 0) term = -term;
    rhs += term;
  }
  return make_report("alt-coefficient", {{"n", n}, {"h", h}}, lhs, rhs);
}

XPoly finite_difference_coeff(Variant v, int h, int n) {
  if (h < 2) throw std::invalid_argument("finite_difference_coeff: h must be >= 2");
  if (n < 0) throw std::invalid_argument("finite_difference_coeff: n must be >= 0");
  ZPoly num = numerator_closed(v, h);
  ZPoly den = denominator_closed(v, h);
  if (v == Variant::x_plus_n) {
    num = num.with_negated_z();
    den = den.with_negated_z();
  }
  std::vector<XPoly> a(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    XPoly value = num.coeff(k);
    for (int i = 1; i <= std::min(k, h); ++i) {
      value -= den.coeff(i) * a[static_cast<size_t>(k - i)];
    }
    a[static_cast<size_t>(k)] = value;
  }
  return a[static_cast<size_t>(n)];
}

Rational hypergeometric_zero_sum(int n) {
  if (n < 1) throw std::invalid_argument("hypergeometric_zero_sum: n must be >= 1");
  std::vector<BigInt> fact(static_cast<size_t>(2 * n));
  fact[0] = 1;
  for (size_t j = 1; j < fact.size(); ++j) {
    fact[j] = fact[j - 1] * static_cast<long>(j);
  }
  const BigInt& denom = fact[static_cast<size_t>(2 * n - 1)];
  Rational total(0);
  for (int k = 0; k <= n; ++k) {
    BigInt b = integer_binomial(BigInt(n), k).to_integer();
    Rational term(b * b * fact[static_cast<size_t>(k)] *
                      fact[static_cast<size_t>(2 * n - 1 - k)],
                  denom);
    if (k % 2 != 0) term = -term;
    total += term;
  }
  return total;
}

IdentityReport addition_check(Variant v, int p, int q, bool signed_convention) {
  if (p < 0 || q < 0) throw std::invalid_argument("addition_check: p, q must be >= 0");
  XPoly lhs = binom_poly(v, p + q);
  if (v == Variant::x_plus_n && signed_convention && (p + q) % 2 != 0) {
    lhs = -lhs;
  }
  auto k = [&](int r, int s) {
    XPoly value = k_coeff(v, r, s);
    if (v == Variant::x_plus_n && !signed_convention && (s - r) % 2 != 0) {
      value = -value;
    }
    return value;
  };
  XPoly rhs = k(0, p) * k(0, q);
  for (int i = 1; i <= std::max(p, q); ++i) {
    rhs += lambda_poly(i + 1) * k(i, p) * k(i, q);
  }
  return make_report(
      "addition",
      {{"variant", variant_to_int(v)}, {"p", p}, {"q", q},
       {"signed", signed_convention ? 1 : 0}},
      lhs, rhs);
}

XPoly ktilde_via_recurrence(int r, int p) {
  if (r < 0 || p < r) {
    throw std::invalid_argument("ktilde_via_recurrence: need p >= r >= 0");
  }
  ComponentSequence seq = component_sequence(Variant::x_plus_n);
  // Row j holds kt_{j,s}; each ladder step consumes one column from the
  // row below, so row 0 must extend to column p + r for row r to reach
  // column p.
  const int width = p + r;
  std::vector<std::vector<XPoly>> rows(
      static_cast<size_t>(r) + 1,
      std::vector<XPoly>(static_cast<size_t>(width) + 1));
  for (int s = 0; s <= width; ++s) {
    XPoly seed = binomial_in_x(s, s);
    if (s % 2 != 0) seed = -seed;
    rows[0][static_cast<size_t>(s)] = seed;
  }
  for (int j = 0; j < r; ++j) {
    const XPoly ab = seq.ab(j + 2);
    const XPoly c = seq.c(j + 1);
    const auto& below = rows[static_cast<size_t>(j)];
    for (int s = j + 1; s <= p + (r - j - 1); ++s) {
      XPoly numer = below[static_cast<size_t>(s + 1)] -
                    c * below[static_cast<size_t>(s)];
      if (j >= 1) numer -= rows[static_cast<size_t>(j - 1)][static_cast<size_t>(s)];
      auto quotient = try_divide(numer, ab);
      if (!quotient) {
        throw std::domain_error("ktilde_via_recurrence: ladder step is not an exact division");
      }
      rows[static_cast<size_t>(j) + 1][static_cast<size_t>(s)] = *quotient;
    }
  }
  return rows[static_cast<size_t>(r)][static_cast<size_t>(p)];
}

}  // namespace jfrac

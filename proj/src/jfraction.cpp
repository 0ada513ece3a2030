#include "jfrac/jfraction.hpp"

#include <stdexcept>
#include <utility>

namespace jfrac {

namespace {

// The recurrence factor (1 - c_i z).
ZPoly one_minus_cz(const ComponentSequence& seq, int i) {
  return ZPoly(std::vector<XPoly>{XPoly(1), -seq.c(i)});
}

}  // namespace

ConvergentPair convergent(const ComponentSequence& seq, int h) {
  if (h < 0) throw std::invalid_argument("convergent: h must be >= 0");
  ConvergentPair out;
  out.h = h;
  ZPoly p_prev;                // P_0 = 0
  ZPoly p_cur(XPoly(1));       // P_1 = 1
  ZPoly q_prev(XPoly(1));      // Q_0 = 1
  ZPoly q_cur;                 // Q_1, set below
  if (h == 0) {
    out.p = p_prev;
    out.q = q_prev;
    return out;
  }
  q_cur = one_minus_cz(seq, 1);
  const ZPoly z2 = ZPoly::z() * ZPoly::z();
  for (int i = 2; i <= h; ++i) {
    const ZPoly lin = one_minus_cz(seq, i);
    const ZPoly quad = z2 * seq.ab(i);
    ZPoly p_next = lin * p_cur - quad * p_prev;
    ZPoly q_next = lin * q_cur - quad * q_prev;
    p_prev = std::move(p_cur);
    p_cur = std::move(p_next);
    q_prev = std::move(q_cur);
    q_cur = std::move(q_next);
  }
  out.p = std::move(p_cur);
  out.q = std::move(q_cur);
  return out;
}

XPoly modulus_product(const ComponentSequence& seq, int from, int to) {
  if (from < 1 || from > to) {
    throw std::invalid_argument("modulus_product: need 1 <= from <= to");
  }
  XPoly prod(1);
  for (int i = from; i <= to; ++i) prod *= seq.ab(i);
  return prod;
}

bool telescope_check(const ComponentSequence& seq, int h) {
  if (h < 1) throw std::invalid_argument("telescope_check: h must be >= 1");
  const ConvergentPair hi = convergent(seq, h);
  const ConvergentPair lo = convergent(seq, h - 1);
  const ZPoly lhs = hi.p * lo.q - lo.p * hi.q;
  const XPoly lambda = h >= 2 ? modulus_product(seq, 2, h) : XPoly(1);
  const ZPoly rhs = ZPoly::monomial(lambda, 2 * h - 2);
  return lhs == rhs;
}

TruncatedSeries expand(const ConvergentPair& conv, int n_terms, bool negate_z) {
  if (n_terms < 0) throw std::invalid_argument("expand: n_terms must be >= 0");
  TruncatedSeries inv = series_inverse(conv.q, n_terms);
  TruncatedSeries out;
  out.coeffs.resize(static_cast<size_t>(n_terms) + 1);
  const int dp = conv.p.degree();
  for (int n = 0; n <= n_terms; ++n) {
    XPoly acc;
    const int top = dp < n ? dp : n;
    for (int i = 0; i <= top; ++i) acc += conv.p.coeff(i) * inv.coeffs[static_cast<size_t>(n - i)];
    if (negate_z && (n % 2) == 1) acc = -acc;
    out.coeffs[static_cast<size_t>(n)] = acc;
  }
  return out;
}

ConvergentTable::ConvergentTable(ComponentSequence seq) : seq_(std::move(seq)) {
  p_ = {ZPoly(), ZPoly(XPoly(1))};   // P_0, P_1
  q_ = {ZPoly(XPoly(1))};            // Q_0; Q_1 needs c(1), filled on first use
}

ConvergentPair ConvergentTable::get(int h) {
  if (h < 0) throw std::invalid_argument("ConvergentTable: h must be >= 0");
  std::lock_guard<std::mutex> lock(mu_);
  if (q_.size() < 2) q_.push_back(one_minus_cz(seq_, 1));
  const ZPoly z2 = ZPoly::z() * ZPoly::z();
  for (int i = static_cast<int>(p_.size()); i <= h; ++i) {
    const ZPoly lin = one_minus_cz(seq_, i);
    const ZPoly quad = z2 * seq_.ab(i);
    p_.push_back(lin * p_[static_cast<size_t>(i - 1)] - quad * p_[static_cast<size_t>(i - 2)]);
    q_.push_back(lin * q_[static_cast<size_t>(i - 1)] - quad * q_[static_cast<size_t>(i - 2)]);
  }
  ConvergentPair out;
  out.h = h;
  out.p = p_[static_cast<size_t>(h)];
  out.q = q_[static_cast<size_t>(h)];
  return out;
}

}  // namespace jfrac

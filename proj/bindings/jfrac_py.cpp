#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "jfrac/congruences.hpp"
#include "jfrac/identities.hpp"
#include "jfrac/jfraction.hpp"
#include "jfrac/oracle.hpp"
#include "jfrac/serialize.hpp"
#include "jfrac/variants.hpp"

namespace py = pybind11;

namespace {

jfrac::Variant pick(int variant) { return jfrac::variant_from_int(variant); }

std::string dump(const nlohmann::ordered_json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_jfrac, m) {
  m.doc() = "Exact J-fraction convergents generating binomial coefficients";

  m.def(
      "convergent",
      [](int variant, int h) {
        jfrac::ConvergentPair c =
            jfrac::convergent(jfrac::component_sequence(pick(variant)), h);
        py::dict d;
        d["h"] = h;
        d["p"] = c.p.to_string();
        d["q"] = c.q.to_string();
        return d;
      },
      py::arg("variant"), py::arg("h"),
      "Order-h convergent pair rendered as polynomial strings");

  m.def(
      "closed_form",
      [](int variant, int h) {
        py::dict d;
        d["p"] = jfrac::numerator_closed(pick(variant), h).to_string();
        d["q"] = jfrac::denominator_closed(pick(variant), h).to_string();
        return d;
      },
      py::arg("variant"), py::arg("h"),
      "Closed-form numerator/denominator rendered as polynomial strings");

  m.def(
      "expand",
      [](int variant, int h, int n_terms) {
        jfrac::Variant v = pick(variant);
        jfrac::ConvergentPair c =
            jfrac::convergent(jfrac::component_sequence(v), h);
        jfrac::TruncatedSeries s =
            jfrac::expand(c, n_terms, v == jfrac::Variant::x_plus_n);
        std::vector<std::string> out;
        out.reserve(s.coeffs.size());
        for (const jfrac::XPoly& a : s.coeffs) out.push_back(a.to_string());
        return out;
      },
      py::arg("variant"), py::arg("h"), py::arg("n_terms"),
      "Series coefficients of the order-h convergent through n_terms");

  m.def(
      "binomial",
      [](int variant, int n) { return jfrac::binom_poly(pick(variant), n).to_string(); },
      py::arg("variant"), py::arg("n"),
      "The degree-n binomial polynomial the series coefficients hit");

  m.def(
      "exact_sum",
      [](int variant, int n) { return jfrac::exact_sum(pick(variant), n).to_string(); },
      py::arg("variant"), py::arg("n"),
      "The finite-sum form of the degree-n binomial polynomial");

  m.def(
      "telescope_check",
      [](int variant, int h) {
        jfrac::ComponentSequence seq = jfrac::component_sequence(pick(variant));
        return jfrac::telescope_check(seq, h);
      },
      py::arg("variant"), py::arg("h"),
      "Determinant identity between adjacent convergents");

  m.def(
      "verify_enumeration",
      [](int variant, int h, int n_max) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const jfrac::IdentityReport& r :
             jfrac::verify_enumeration(pick(variant), h, n_max)) {
          arr.push_back(jfrac::to_json(r));
        }
        return dump(arr);
      },
      py::arg("variant"), py::arg("h"), py::arg("n_max"),
      "JSON array of per-coefficient enumeration reports");

  m.def(
      "alt_identity",
      [](int n, int h) { return dump(jfrac::to_json(jfrac::alt_coefficient_identity(n, h))); },
      py::arg("n"), py::arg("h"),
      "JSON report for the alternating coefficient identity");

  m.def(
      "addition",
      [](int variant, int p, int q, bool signed_convention) {
        return dump(jfrac::to_json(
            jfrac::addition_check(pick(variant), p, q, signed_convention)));
      },
      py::arg("variant"), py::arg("p"), py::arg("q"),
      py::arg("signed_convention") = true,
      "JSON report for the index-addition formula");

  m.def(
      "ktilde",
      [](int r, int p) { return jfrac::ktilde_via_recurrence(r, p).to_string(); },
      py::arg("r"), py::arg("p"),
      "Reduction coefficient computed through the ladder recurrence");

  m.def(
      "k_closed",
      [](int variant, int r, int p) {
        return jfrac::k_coeff(pick(variant), r, p).to_string();
      },
      py::arg("variant"), py::arg("r"), py::arg("p"),
      "Closed form of the reduction coefficient");

  m.def(
      "hypergeometric_zero_sum",
      [](int n) { return jfrac::hypergeometric_zero_sum(n).to_string(); },
      py::arg("n"), "Value of the factorial zero-sum (expected \"0\")");

  m.def(
      "lambda_at",
      [](int h, long x) { return jfrac::lambda_at(h, x).to_string(); },
      py::arg("h"), py::arg("x"), "Level-h modulus value at an integer point");

  m.def("find_admissible", &jfrac::find_admissible, py::arg("h"), py::arg("x"),
        py::arg("m_max"),
        "Levels m in [h, m_max] whose modulus is an integer multiple of h");

  m.def(
      "congruence_check",
      [](int variant, int h, int m, long x, long n) {
        return dump(jfrac::to_json(
            jfrac::congruence_check(pick(variant), h, m, x, n)));
      },
      py::arg("variant"), py::arg("h"), py::arg("m"), py::arg("x"),
      py::arg("n"), "JSON report for one congruence instance");

  m.def(
      "conjecture_scan",
      [](int variant, int h, long x_max, long n_max) {
        return dump(jfrac::to_json(
            jfrac::conjecture_scan(pick(variant), h, x_max, n_max)));
      },
      py::arg("variant"), py::arg("h"), py::arg("x_max"), py::arg("n_max"),
      "JSON report for the fixed-level congruence scan");

  m.def(
      "oracle_binom",
      [](long top, long k) { return jfrac::oracle::binom_int(jfrac::BigInt(top), k).get_str(); },
      py::arg("top"), py::arg("k"),
      "Plain-integer binomial from the reference oracle, as a string");

  m.def("lucas_residue", &jfrac::oracle::lucas_residue, py::arg("n"),
        py::arg("k"), py::arg("p"),
        "Binomial residue modulo a prime via the base-p digit product");

  m.def(
      "ogf_coefficients",
      [](int variant, long x0, int n_terms) {
        std::vector<std::string> out;
        for (const jfrac::BigInt& b :
             jfrac::oracle::ogf_coefficients(variant, x0, n_terms)) {
          out.push_back(b.get_str());
        }
        return out;
      },
      py::arg("variant"), py::arg("x0"), py::arg("n_terms"),
      "Truncated generating-function coefficients from the oracle");

  m.def("ogf_cross_check", &jfrac::oracle::ogf_cross_check, py::arg("variant"),
        py::arg("x0"), py::arg("n_terms"),
        "Oracle self-agreement between its two binomial routes");
}

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "jfrac/congruences.hpp"
#include "jfrac/identities.hpp"
#include "jfrac/jfraction.hpp"
#include "jfrac/parallel.hpp"
#include "jfrac/serialize.hpp"
#include "jfrac/variants.hpp"

namespace {

using jfrac::IdentityReport;
using jfrac::Variant;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string params_text(const IdentityReport& r) {
  std::ostringstream out;
  for (const auto& [name, value] : r.params) out << ' ' << name << '=' << value;
  return out.str();
}

// One verification suite flattened into independent tasks; each task
// yields a batch of reports so the batch boundaries (one convergent
// expansion, say) stay intact.  Tasks run under the thread budget and
// results are concatenated in task order, keeping output deterministic.
using Task = std::function<std::vector<IdentityReport>()>;

std::vector<IdentityReport> run_tasks(const std::vector<Task>& tasks) {
  std::vector<std::vector<IdentityReport>> batches = jfrac::parallel_map(
      tasks.size(), [&](std::size_t i) { return tasks[i](); });
  std::vector<IdentityReport> out;
  for (std::vector<IdentityReport>& batch : batches) {
    for (IdentityReport& r : batch) out.push_back(std::move(r));
  }
  return out;
}

// A report is informational (never affects the exit code) when it checks
// a range the underlying statement only suggests: the enumeration range
// h < n < 2h, marked by proven=0.
bool is_informational(const IdentityReport& r) {
  for (const auto& [name, value] : r.params) {
    if (name == "proven") return value == 0;
  }
  return false;
}

struct VerifyOptions {
  std::vector<Variant> variants;
  int h_max = 10;
  int n_max = -1;  // <0: per-suite default
  int p_max = 8;
  int q_max = 8;
};

std::vector<Task> enumeration_tasks(const VerifyOptions& opt) {
  std::vector<Task> tasks;
  for (Variant v : opt.variants) {
    for (int h = 2; h <= opt.h_max; ++h) {
      int n_hi = opt.n_max >= 0 ? std::min(opt.n_max, 2 * h - 1) : 2 * h - 1;
      tasks.push_back([v, h, n_hi] { return jfrac::verify_enumeration(v, h, n_hi); });
    }
  }
  return tasks;
}

std::vector<Task> exact_sum_tasks(const VerifyOptions& opt) {
  int n_hi = opt.n_max >= 0 ? opt.n_max : 30;
  std::vector<Task> tasks;
  for (Variant v : opt.variants) {
    for (int n = 0; n <= n_hi; ++n) {
      tasks.push_back([v, n]() -> std::vector<IdentityReport> {
        jfrac::XPoly lhs = jfrac::exact_sum(v, n);
        jfrac::XPoly rhs = jfrac::binom_poly(v, n);
        IdentityReport r;
        r.identity_id = "exact-sum";
        r.params = {{"variant", jfrac::variant_to_int(v)}, {"n", n}};
        r.holds = (lhs == rhs);
        r.lhs = lhs.to_string();
        r.rhs = rhs.to_string();
        return {r};
      });
    }
  }
  return tasks;
}

std::vector<Task> alt_identity_tasks(const VerifyOptions& opt) {
  std::vector<Task> tasks;
  for (int h = 1; h <= opt.h_max; ++h) {
    for (int n = 0; n < h; ++n) {
      tasks.push_back([n, h]() -> std::vector<IdentityReport> {
        return {jfrac::alt_coefficient_identity(n, h)};
      });
    }
  }
  return tasks;
}

std::vector<Task> telescope_tasks(const VerifyOptions& opt) {
  std::vector<Task> tasks;
  for (Variant v : opt.variants) {
    for (int h = 1; h <= opt.h_max; ++h) {
      tasks.push_back([v, h]() -> std::vector<IdentityReport> {
        jfrac::ComponentSequence seq = jfrac::component_sequence(v);
        jfrac::ConvergentPair hi = jfrac::convergent(seq, h);
        jfrac::ConvergentPair lo = jfrac::convergent(seq, h - 1);
        jfrac::ZPoly cross = hi.p * lo.q - lo.p * hi.q;
        jfrac::XPoly lam =
            h >= 2 ? jfrac::modulus_product(seq, 2, h) : jfrac::XPoly(1);
        jfrac::ZPoly expected = jfrac::ZPoly::monomial(lam, 2 * h - 2);
        IdentityReport r;
        r.identity_id = "telescope";
        r.params = {{"variant", jfrac::variant_to_int(v)}, {"h", h}};
        r.holds = (cross == expected);
        r.lhs = cross.to_string();
        r.rhs = expected.to_string();
        return {r};
      });
    }
  }
  return tasks;
}

std::vector<Task> hypergeometric_tasks(const VerifyOptions& opt) {
  int n_hi = opt.n_max >= 0 ? opt.n_max : 50;
  std::vector<Task> tasks;
  for (int n = 1; n <= n_hi; ++n) {
    tasks.push_back([n]() -> std::vector<IdentityReport> {
      jfrac::Rational value = jfrac::hypergeometric_zero_sum(n);
      IdentityReport r;
      r.identity_id = "hypergeometric";
      r.params = {{"n", n}};
      r.holds = value.is_zero();
      r.lhs = value.to_string();
      r.rhs = "0";
      return {r};
    });
  }
  return tasks;
}

std::vector<Task> addition_tasks(const VerifyOptions& opt) {
  std::vector<Task> tasks;
  for (Variant v : opt.variants) {
    std::vector<bool> conventions =
        v == Variant::x_plus_n ? std::vector<bool>{true, false}
                               : std::vector<bool>{true};
    for (bool sgn : conventions) {
      for (int p = 0; p <= opt.p_max; ++p) {
        for (int q = 0; q <= opt.q_max; ++q) {
          tasks.push_back([v, p, q, sgn]() -> std::vector<IdentityReport> {
            return {jfrac::addition_check(v, p, q, sgn)};
          });
        }
      }
    }
  }
  return tasks;
}

std::vector<Task> ktilde_tasks(const VerifyOptions& opt) {
  std::vector<Task> tasks;
  for (int p = 0; p <= opt.p_max; ++p) {
    for (int r = 0; r <= p; ++r) {
      tasks.push_back([r, p]() -> std::vector<IdentityReport> {
        IdentityReport rep;
        rep.identity_id = "ktilde";
        rep.params = {{"r", r}, {"p", p}};
        jfrac::XPoly closed = jfrac::k_coeff(Variant::x_plus_n, r, p);
        rep.rhs = closed.to_string();
        try {
          jfrac::XPoly ladder = jfrac::ktilde_via_recurrence(r, p);
          rep.holds = (ladder == closed);
          rep.lhs = ladder.to_string();
        } catch (const std::domain_error& e) {
          rep.holds = false;
          rep.lhs = std::string("error: ") + e.what();
        }
        return {rep};
      });
    }
  }
  return tasks;
}

struct SuiteResult {
  std::string name;
  std::vector<IdentityReport> reports;
};

int emit_verify(const std::vector<SuiteResult>& suites, bool json,
                std::ostream& out) {
  bool proven_failure = false;
  for (const SuiteResult& suite : suites) {
    long total = 0, passed = 0, proven_failures = 0, info_failures = 0;
    for (const IdentityReport& r : suite.reports) {
      ++total;
      if (r.holds) {
        ++passed;
      } else if (is_informational(r)) {
        ++info_failures;
      } else {
        ++proven_failures;
        proven_failure = true;
      }
      if (json) out << jfrac::to_json(r).dump() << '\n';
    }
    if (json) {
      nlohmann::ordered_json summary = {{"suite", suite.name},
                                        {"checks", total},
                                        {"passed", passed},
                                        {"proven_failures", proven_failures},
                                        {"informational_failures", info_failures}};
      out << summary.dump() << '\n';
    } else {
      out << suite.name << ": " << passed << '/' << total
          << (suite.name == "hypergeometric" ? " zero-sums hold" : " checks hold");
      if (info_failures > 0) {
        out << " (informational failures: " << info_failures << ')';
      }
      out << '\n';
      for (const IdentityReport& r : suite.reports) {
        if (!r.holds && !is_informational(r)) {
          out << "  FAIL " << r.identity_id << params_text(r)
              << ": " << r.lhs << " != " << r.rhs << '\n';
        }
      }
    }
  }
  return proven_failure ? kExitCheckFailed : kExitOk;
}

int cmd_convergent(int variant, int h, bool closed_form, bool json) {
  Variant v = jfrac::variant_from_int(variant);
  jfrac::ConvergentPair conv = jfrac::convergent(jfrac::component_sequence(v), h);
  std::ostringstream out;
  bool match = true;
  if (json) {
    nlohmann::ordered_json j = {{"variant", variant},
                                {"h", h},
                                {"p", conv.p.to_string()},
                                {"q", conv.q.to_string()}};
    if (closed_form) {
      jfrac::ZPoly cp = jfrac::numerator_closed(v, h);
      jfrac::ZPoly cq = jfrac::denominator_closed(v, h);
      match = (conv.p == cp && conv.q == cq);
      j["closed_p"] = cp.to_string();
      j["closed_q"] = cq.to_string();
      j["match"] = match;
    }
    out << j.dump() << '\n';
  } else {
    out << "P: " << conv.p.to_string() << '\n';
    out << "Q: " << conv.q.to_string() << '\n';
    if (closed_form) {
      jfrac::ZPoly cp = jfrac::numerator_closed(v, h);
      jfrac::ZPoly cq = jfrac::denominator_closed(v, h);
      match = (conv.p == cp && conv.q == cq);
      out << "closed P: " << cp.to_string() << '\n';
      out << "closed Q: " << cq.to_string() << '\n';
      out << "verdict: " << (match ? "match" : "mismatch") << '\n';
    }
  }
  std::cout << out.str();
  return match ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opt, bool json) {
  std::vector<std::pair<std::string, std::function<std::vector<Task>()>>> all = {
      {"enumeration", [&] { return enumeration_tasks(opt); }},
      {"exact-sum", [&] { return exact_sum_tasks(opt); }},
      {"alt-identity", [&] { return alt_identity_tasks(opt); }},
      {"telescope", [&] { return telescope_tasks(opt); }},
      {"hypergeometric", [&] { return hypergeometric_tasks(opt); }},
      {"addition", [&] { return addition_tasks(opt); }},
      {"ktilde", [&] { return ktilde_tasks(opt); }},
  };
  std::vector<SuiteResult> results;
  for (const auto& [name, make] : all) {
    if (suite != "all" && suite != name) continue;
    results.push_back({name, run_tasks(make())});
  }
  std::ostringstream out;
  int code = emit_verify(results, json, out);
  std::cout << out.str();
  return code;
}

int cmd_find_m(int variant, int h, long x, int m_max, bool json) {
  std::vector<jfrac::AdmissibleModulus> found =
      jfrac::find_admissible_detailed(h, x, m_max);
  std::ostringstream out;
  if (json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const jfrac::AdmissibleModulus& a : found) arr.push_back(jfrac::to_json(a));
    nlohmann::ordered_json j = {{"variant", variant},
                                {"h", h},
                                {"x", x},
                                {"m_max", m_max},
                                {"admissible", arr}};
    out << j.dump() << '\n';
  } else {
    if (found.empty()) {
      out << "no admissible levels in [" << h << ", " << m_max << "]\n";
    }
    for (const jfrac::AdmissibleModulus& a : found) {
      out << "m=" << a.m << " lambda=" << a.lambda.to_string()
          << " degenerate=" << (a.degenerate ? "true" : "false") << '\n';
    }
  }
  std::cout << out.str();
  return kExitOk;
}

int cmd_congruence_check(int variant, int h, int m, long x, long n, bool json) {
  jfrac::CongruenceCase cs =
      jfrac::congruence_check(jfrac::variant_from_int(variant), h, m, x, n);
  std::ostringstream out;
  if (json) {
    out << jfrac::to_json(cs).dump() << '\n';
  } else {
    out << "variant=" << cs.variant << " h=" << cs.h << " m=" << cs.m
        << " x=" << cs.x << " n=" << cs.n << " lambda=" << cs.lambda.to_string()
        << " admissible=" << (cs.admissible ? "true" : "false")
        << " lhs=" << cs.lhs.get_str() << " rhs=" << cs.rhs.to_string()
        << " lhs_mod=" << cs.lhs_mod << " rhs_mod="
        << (cs.rhs_mod ? std::to_string(*cs.rhs_mod) : std::string("none"))
        << " holds=" << (cs.holds ? "true" : "false") << '\n';
  }
  std::cout << out.str();
  // The congruence statement only promises residue agreement under its
  // hypotheses; a counterexample there is a hard failure, everything
  // else is reporting.
  bool violates = cs.admissible && cs.within_hypothesis && cs.rhs_integral &&
                  !cs.holds;
  return violates ? kExitCheckFailed : kExitOk;
}

int cmd_conjecture(int variant, int h, long x_max, long n_max, bool json) {
  jfrac::ConjectureReport rep =
      jfrac::conjecture_scan(jfrac::variant_from_int(variant), h, x_max, n_max);
  std::ostringstream out;
  if (json) {
    out << jfrac::to_json(rep).dump() << '\n';
  } else {
    out << "variant=" << rep.variant << " h=" << rep.h << " grid=" << rep.x_max
        << 'x' << rep.n_max << " points=" << rep.points
        << " failures=" << rep.failures.size()
        << " pass_rate=" << rep.pass_rate.to_string();
    if (rep.display_checked) {
      out << " display_failures=" << rep.display_failures.size();
    }
    out << '\n';
  }
  std::cout << out.str();
  return kExitOk;  // conjecture outcomes never alter the exit code
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact J-fraction convergents generating binomial coefficients"};
  app.require_subcommand(1);
  // --h is a domain option here, so help lives on --help alone.
  app.set_help_flag("--help", "Print this help message and exit");

  // convergent ------------------------------------------------------
  int c_variant = 1;
  int c_h = 0;
  bool c_closed = false;
  std::string c_output = "table";
  CLI::App* conv = app.add_subcommand(
      "convergent", "Build the order-h convergent pair (P, Q)");
  conv->set_help_flag("--help", "Print this help message and exit");
  conv->add_option("--variant", c_variant, "1: binom(x+n,n); 2: binom(x,n)")
      ->check(CLI::IsMember({1, 2}));
  conv->add_option("--h", c_h, "Convergent order (>= 0)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  conv->add_flag("--closed-form", c_closed,
                 "Also print the closed forms and an equality verdict");
  conv->add_option("--output", c_output, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  // verify ----------------------------------------------------------
  std::string v_suite;
  int v_variant = 0;
  VerifyOptions v_opt;
  std::string v_output = "table";
  CLI::App* verify = app.add_subcommand("verify", "Run identity suites");
  verify->set_help_flag("--help", "Print this help message and exit");
  verify
      ->add_option("--suite", v_suite,
                   "enumeration|exact-sum|alt-identity|telescope|"
                   "hypergeometric|addition|ktilde|all")
      ->required()
      ->check(CLI::IsMember({"enumeration", "exact-sum", "alt-identity",
                             "telescope", "hypergeometric", "addition",
                             "ktilde", "all"}));
  verify->add_option("--variant", v_variant, "Restrict to one variant")
      ->check(CLI::IsMember({1, 2}));
  verify->add_option("--h-max", v_opt.h_max, "Largest convergent order")
      ->check(CLI::PositiveNumber);
  verify->add_option("--n-max", v_opt.n_max, "Largest coefficient index")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--p-max", v_opt.p_max, "Largest left index")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--q-max", v_opt.q_max, "Largest right index")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--output", v_output, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  // congruence ------------------------------------------------------
  int g_variant = 1;
  int g_h = 0;
  int g_m = -1;
  int g_m_max = -1;
  long g_x = -1;
  long g_n = -1;
  long g_x_max = -1;
  long g_n_max = -1;
  bool g_find_m = false;
  bool g_conjecture = false;
  std::string g_output = "json";
  CLI::App* cong = app.add_subcommand(
      "congruence", "Admissible-modulus search, congruence checks, scans");
  cong->set_help_flag("--help", "Print this help message and exit");
  cong->add_option("--variant", g_variant, "1: binom(x+n,n); 2: binom(x,n)")
      ->check(CLI::IsMember({1, 2}));
  cong->add_option("--h", g_h, "Modulus (>= 2)")->required();
  cong->add_flag("--find-m", g_find_m, "List admissible convergent levels");
  cong->add_option("--m-max", g_m_max, "Largest level for --find-m");
  cong->add_option("--m", g_m, "Convergent level (>= h)");
  cong->add_option("--x", g_x, "Integer point x");
  cong->add_option("--n", g_n, "Coefficient index n");
  cong->add_flag("--conjecture", g_conjecture, "Scan the fixed-level congruence");
  cong->add_option("--x-max", g_x_max, "Grid bound on x for --conjecture");
  cong->add_option("--n-max", g_n_max, "Grid bound on n for --conjecture");
  cong->add_option("--output", g_output, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (conv->parsed()) {
      return cmd_convergent(c_variant, c_h, c_closed, c_output == "json");
    }
    if (verify->parsed()) {
      if (v_variant == 0) {
        v_opt.variants = {Variant::x_plus_n, Variant::x_choose_n};
      } else {
        v_opt.variants = {jfrac::variant_from_int(v_variant)};
      }
      return cmd_verify(v_suite, v_opt, v_output == "json");
    }
    // congruence
    bool json = g_output == "json";
    int modes = (g_find_m ? 1 : 0) + (g_conjecture ? 1 : 0) +
                (!g_find_m && !g_conjecture ? 1 : 0);
    (void)modes;
    if (g_find_m && g_conjecture) {
      std::cerr << "congruence: --find-m and --conjecture are mutually exclusive\n";
      return kExitUsage;
    }
    if (g_find_m) {
      if (g_m_max < 0 || g_x < 0) {
        std::cerr << "congruence --find-m: requires --x and --m-max\n";
        return kExitUsage;
      }
      return cmd_find_m(g_variant, g_h, g_x, g_m_max, json);
    }
    if (g_conjecture) {
      if (g_x_max < 0 || g_n_max < 0) {
        std::cerr << "congruence --conjecture: requires --x-max and --n-max\n";
        return kExitUsage;
      }
      return cmd_conjecture(g_variant, g_h, g_x_max, g_n_max, json);
    }
    if (g_m < 0 || g_x < 0 || g_n < 0) {
      std::cerr << "congruence: requires --m, --x and --n (or use --find-m / --conjecture)\n";
      return kExitUsage;
    }
    return cmd_congruence_check(g_variant, g_h, g_m, g_x, g_n, json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

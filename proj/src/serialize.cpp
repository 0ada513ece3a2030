#include "jfrac/serialize.hpp"

namespace jfrac {

namespace {

nlohmann::ordered_json failures_json(const std::vector<ConjectureFailure>& fs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ConjectureFailure& f : fs) {
    arr.push_back({{"x", f.x}, {"n", f.n}, {"non_integral", f.non_integral}});
  }
  return arr;
}

}  // namespace

nlohmann::ordered_json to_json(const IdentityReport& report) {
  nlohmann::ordered_json params;
  for (const auto& [name, value] : report.params) params[name] = value;
  return {{"identity_id", report.identity_id},
          {"params", params},
          {"holds", report.holds},
          {"lhs", report.lhs},
          {"rhs", report.rhs}};
}

nlohmann::ordered_json to_json(const AdmissibleModulus& level) {
  return {{"m", level.m},
          {"lambda", level.lambda.to_string()},
          {"degenerate", level.degenerate}};
}

nlohmann::ordered_json to_json(const CongruenceCase& cs) {
  nlohmann::ordered_json j = {{"variant", cs.variant},
                              {"h", cs.h},
                              {"m", cs.m},
                              {"x", cs.x},
                              {"n", cs.n},
                              {"lambda", cs.lambda.to_string()},
                              {"admissible", cs.admissible},
                              {"degenerate", cs.degenerate},
                              {"within_hypothesis", cs.within_hypothesis},
                              {"lhs", cs.lhs.get_str()},
                              {"rhs", cs.rhs.to_string()},
                              {"rhs_integral", cs.rhs_integral},
                              {"lhs_mod", cs.lhs_mod}};
  if (cs.rhs_mod) {
    j["rhs_mod"] = *cs.rhs_mod;
  } else {
    j["rhs_mod"] = nullptr;
  }
  j["holds"] = cs.holds;
  return j;
}

nlohmann::ordered_json to_json(const ConjectureReport& report) {
  nlohmann::ordered_json j = {{"variant", report.variant},
                              {"h", report.h},
                              {"grid", {{"x_max", report.x_max},
                                        {"n_max", report.n_max}}},
                              {"points", report.points},
                              {"failures", failures_json(report.failures)},
                              {"pass_rate", report.pass_rate.to_string()},
                              {"display_checked", report.display_checked}};
  if (report.display_checked) {
    j["display_failures"] = failures_json(report.display_failures);
  }
  return j;
}

}  // namespace jfrac

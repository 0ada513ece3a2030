#pragma once

#include "json.hpp"

#include "jfrac/congruences.hpp"
#include "jfrac/identities.hpp"

namespace jfrac {

/// JSON encodings used by the command-line tool and the test harness.
/// All of them use ordered objects so that serialized output is
/// byte-for-byte reproducible.  Rationals are rendered as "num/den"
/// strings (plain "num" when integral) and big integers as decimal
/// strings, since they overflow JSON's interoperable number range.

nlohmann::ordered_json to_json(const IdentityReport& report);
nlohmann::ordered_json to_json(const AdmissibleModulus& level);
nlohmann::ordered_json to_json(const CongruenceCase& cs);
nlohmann::ordered_json to_json(const ConjectureReport& report);

}  // namespace jfrac

#pragma once

// JSON forms of the verification and zeta records. Rationals are written in
// their "p/q" text form; reals as decimal strings.

#include <json.hpp>

#include "eulersum/sums.hpp"
#include "eulersum/zeta.hpp"

namespace eulersum {

nlohmann::json to_json(const Rational& value);
nlohmann::json to_json(const SumReport& report);

/// {"s", "x", "value", "error_bound", "method", "terms_or_nodes"} plus "exact" for exact results.
nlohmann::json to_json(const ZetaResult& result, const Rational& s, const Rational& x);

}  // namespace eulersum

#include "eulersum/json.hpp"

#include <string>

namespace eulersum {

nlohmann::json to_json(const Rational& value) { return value.to_string(); }

nlohmann::json to_json(const SumReport& report) {
    return {
        {"m", report.m},
        {"k", report.k},
        {"closed", to_json(report.closed_value)},
        {"expanded", report.expanded_value ? to_json(*report.expanded_value) : nlohmann::json(nullptr)},
        {"naive", to_json(report.oracle_value)},
        {"all_agree", report.all_agree},
    };
}

nlohmann::json to_json(const ZetaResult& result, const Rational& s, const Rational& x) {
    nlohmann::json out = {
        {"s", to_json(s)},
        {"x", to_json(x)},
        {"value", to_decimal_string(result.value)},
        {"error_bound", to_decimal_string(result.error_bound, 6)},
        {"method", std::string(to_string(result.method))},
        {"terms_or_nodes", result.terms_or_nodes},
    };
    if (result.exact) out["exact"] = to_json(*result.exact);
    return out;
}

}  // namespace eulersum

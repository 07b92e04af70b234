#pragma once

#include <json.hpp>
#include <string>

#include "stringy/fan.hpp"
#include "stringy/jets.hpp"

namespace stringy {

// [[exponent, coefficient], ...] in decreasing exponent order.
nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

nlohmann::json fan_to_json(const Fan& f);
Fan fan_from_json(const nlohmann::json& j);

// Strata keys are 1-based component lists like "1,3"; "" is the open part.
nlohmann::json divisor_to_json(const SncDivisorData& d);
SncDivisorData divisor_from_json(const nlohmann::json& j);

// A worked example frozen to disk: the quotient, its subdivision rays, the
// resolved fan, and the values the run must reproduce.
struct Fixture {
    std::string name;
    QuotientSpec spec;
    std::vector<BoxPoint> rays;  // subdivision order
    Fan fan;
    std::vector<std::int64_t> expected_d;
    LaurentPoly expected_e_y;
    LaurentPoly expected_e_st;
};

nlohmann::json fixture_to_json(const Fixture& fx);
Fixture fixture_from_json(const nlohmann::json& j);

// Directory search order: STRINGY_FIXTURES env var, then the compiled-in
// repo default.
std::string fixture_dir();
// FixtureMissing when <dir>/<name>.json does not exist; ParseError when it
// exists but cannot be parsed.
Fixture load_fixture(const std::string& name);

}  // namespace stringy

#pragma once

#include <string>

#include "json.hpp"
#include "skolem/decider.hpp"

namespace skolem {

using ordered_json = nlohmann::ordered_json;

// {"coefficients": ["1","1"], "initial": ["1","1"]}; rationals are strings
// "p" or "p/q" (plain JSON integers are accepted too).
// Throws Error{ParseError} on malformed input and the validate_lrs errors.
LRSpec lrs_from_json(const nlohmann::json& j);
LRSpec lrs_from_json_text(const std::string& text);

ordered_json to_json(const LRSpec& spec);
// Canonical single-line rendering.
std::string canonical_json(const LRSpec& spec);

ordered_json to_json(const BigBound& bound);
ordered_json to_json(const BoundReport& report);
ordered_json to_json(const RootProfile& profile);
ordered_json to_json(const Classification& c);
ordered_json to_json(const Verdict& verdict);
ordered_json to_json(const DensityReport& report);

// Upper endpoint in scientific notation, 17 significant digits.
std::string upper_string(const mp::Interval& value);

}  // namespace skolem

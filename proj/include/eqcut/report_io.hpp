#pragma once

// Serialization of characters, tables and reports.
//
// A Character is a JSON object from decimal weight strings to integer
// multiplicities, e.g. {"-1": 1, "0": 2}, keys in increasing weight order.
// A CharPoly is an array of such objects indexed by the power of t.

#include <string>

#include <json.hpp>

#include "eqcut/character.hpp"
#include "eqcut/cp1_geometry.hpp"
#include "eqcut/verifier.hpp"

namespace eqcut {

using Json = nlohmann::ordered_json;

Json to_json(const Character& c);
Json to_json(const CharPoly& p);
Json to_json(const CohomologyTable& t);
Json to_json(const CutDecomposition& c);
Json to_json(const CheckResult& r);
Json to_json(const SweepReport& r);
Json to_json(const EqualityRegionReport& r);

// All parsers throw ParseError on malformed input. Zero multiplicities are
// dropped; non-integer values are rejected.
Character character_from_json(const Json& j);
CharPoly charpoly_from_json(const Json& j);
CohomologyTable table_from_json(const Json& j);
CheckResult check_result_from_json(const Json& j);
SweepReport sweep_report_from_json(const Json& j);

/// One row per point and check: r_P,r_Q,check_id,passed,witness. Rank > 1
/// points list their weights separated by ';'.
std::string to_csv(const SweepReport& r);
std::string to_markdown(const SweepReport& r);
std::string to_markdown(const EqualityRegionReport& r);

/// Pretty-printed JSON with a trailing newline.
std::string dump(const Json& j);

}  // namespace eqcut

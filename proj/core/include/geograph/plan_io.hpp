#pragma once

#include <nlohmann/json.hpp>

#include "geograph/verifier.hpp"

namespace geograph {

// Certificates are serialized with every integer as a base-10 string, so
// they survive any JSON reader regardless of its number width.
using Json = nlohmann::ordered_json;

Json to_json(const ChernQuintuple& q);
Json to_json(const ParamVector& p);
Json to_json(const AdmissibilityReport& r);
Json to_json(const Plan& plan);
Json to_json(const VerificationReport& r);
Json to_json(const BoxSummary& s);
Json catalog_json();

ChernQuintuple quintuple_from_json(const Json& j);
ParamVector params_from_json(const Json& j);

// Throws MalformedPlan on missing fields, junk integers, unknown branch
// names, unsupported format_version, or a target_chern that contradicts the
// target parameters.
Plan plan_from_json(const Json& j);

std::string plan_to_string(const Plan& plan);
Plan plan_from_string(const std::string& text);

}  // namespace geograph

#pragma once

#include "inls/lemmas.hpp"

#include <json.hpp>

namespace inls {

using Json = nlohmann::ordered_json;

Json to_json(const ParamSet& params);
ParamSet param_set_from_json(const Json& j);

Json to_json(const LemmaReport& report);

/// Re-parses a serialized report and recomputes the derived flags; throws on
/// malformed input. Round-trips bit-identically through dump().
LemmaReport lemma_report_from_json(const Json& j);

}  // namespace inls

#pragma once

// JSON interchange formats. Weightings are the unit piped between CLI
// commands; certificates and audit reports are output-only. Key order is
// canonical (alphabetical), so re-serialization is byte-identical.

#include <json.hpp>

#include "zsum/auditor.hpp"
#include "zsum/detector.hpp"
#include "zsum/pell.hpp"
#include "zsum/weighting.hpp"

namespace zsum {

// {"n": int, "r": int, "weights": [int,...]} in edge-index order.
nlohmann::json weighting_to_json(const SignedWeighting& w);
SignedWeighting weighting_from_json(const nlohmann::json& j);

// {"context": str, "kind": "ZERO_SUM_WITNESS"|"NONE_EXISTS",
//  "m": int, "witness": [int,...]|null}
nlohmann::json certificate_to_json(const Certificate& c);

nlohmann::json report_to_json(const AuditReport& r);

// x and y as decimal strings; they outgrow fixed-width integers.
nlohmann::json pell_solutions_to_json(const std::vector<pell::PellSolution>& sols);

} // namespace zsum

#pragma once

#include <vector>

#include <json.hpp>

#include "qdissect/cancellation.hpp"
#include "qdissect/scan.hpp"
#include "qdissect/series.hpp"
#include "qdissect/verifier.hpp"

namespace qdissect {

using Json = nlohmann::ordered_json;

/// {"lo", "order", "coeffs": [[exponent, "decimal"], ...]}, nonzero terms only.
Json to_json(const Series &s);
/// {"t", "r", "mode", "status", "pairing", "residual_first_exponent"}
Json to_json(const CancellationReport &r);
/// One entry of the run report's "claims" array.
Json to_json(const ProofReport &r);
Json to_json(const Finding &f);
Json to_json(const FamilyTemplate &f);

/// Throws std::invalid_argument on missing or malformed fields.
FamilyTemplate family_from_json(const Json &j);

/// {"claims": [...], "summary": {"certified", "verified", "refuted", "inapplicable"}}
Json run_report(const std::vector<ProofReport> &reports);
/// {"family", "t", "order", "findings": [...], "summary": {...}}
Json scan_report(const FamilyTemplate &tmpl, const std::vector<Finding> &findings);

} // namespace qdissect

#pragma once

#include "json.hpp"

#include "ucf/bounds.hpp"
#include "ucf/enumerate.hpp"
#include "ucf/search.hpp"

namespace ucf {

/// Report schemas. Verdict-relevant values are exact integers; any decimal
/// field is a convenience approximation, never an input to a verdict.
using Json = nlohmann::ordered_json;

Json ratio_json(const Ratio& r);

/// {context, verdict, bound: {num, den}, witnesses: [{element, num, den}], detail}
Json bound_report_json(const BoundReport& report);

Json proof_quantities_json(const ProofQuantities& q);

Json chain_json(const std::vector<ChainStep>& chain);

/// {config, families_seen, per_check: {name: {holds, fails, not_applicable}},
///  failing_witnesses: [{check, family, instance, detail}], wall_time_ms}
Json sweep_report_json(const SweepReport& report);

Json search_record_json(const SearchRecord& rec);

/// Inverse of search_record_json; the closure is re-derived from the
/// generators.
SearchRecord search_record_from_json(const Json& j);

/// Full-provenance dump for a best c1 below 1/2. The finding would be
/// extraordinary, so it is flagged for manual audit instead of asserted.
Json extraordinary_audit_json(const SearchRecord& rec);

}  // namespace ucf

#pragma once

// JSON borders. Emitters use ordered_json with deterministic key and element
// order, so fixed inputs and seeds serialize byte-stably; readers validate
// shapes and report the offending path in plain std::invalid_argument terms.

#include <json.hpp>

#include "descent/campaign.hpp"
#include "descent/openrec.hpp"
#include "descent/principle.hpp"
#include "descent/rpo.hpp"

namespace descent {

using OrderedJson = nlohmann::ordered_json;

// {"status", "precedence" (adjacent pairs of the total order, top first),
//  "statuses" (symbol -> "lex"/"mul"), "oriented" ({lhs, rhs, clause_trace}
//  per rule), "candidates_tried", and "reason" when not YES}
OrderedJson certificate_to_json(const Certificate& cert, const Signature& sig,
                                std::span<const Rule> rules);

// {"carrier": labels, "succ"/"sub" (and optional "succ0"/"gg"): 0/1 matrix rows}
OrderedJson instance_to_json(const PrincipleInstance& inst);

// Inverse of instance_to_json; accepts 0/1 numbers or booleans in matrix
// cells. Throws std::invalid_argument on shape or value errors and LimitError
// past the carrier cap.
PrincipleInstance instance_from_json(const nlohmann::json& j);

// [{"depth", "spliced_at", "y", "f_result"}], in recorded order.
OrderedJson phi_trace_to_json(const PhiTrace& trace);

OrderedJson campaign_to_json(const StpCampaignResult& r);
OrderedJson campaign_to_json(const GlCampaignResult& r);
OrderedJson campaign_to_json(const Lemma44CampaignResult& r);
OrderedJson campaign_to_json(const MbsCampaignResult& r);
OrderedJson campaign_to_json(const BiCampaignResult& r);
OrderedJson campaign_to_json(const Lemma34CampaignResult& r);

}  // namespace descent

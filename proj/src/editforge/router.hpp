#pragma once

#include <vector>

#include "editforge/agent.hpp"
#include "editforge/records.hpp"

namespace editforge {

// Sends the router prompt with the source image and parses one verdict per task.
// A malformed reply is re-requested up to max_reparse times with a corrective
// suffix; after that Unroutable(source id) is raised.
RoutingDecision route(const Agent& agent, const SourceRecord& source, int max_reparse = 2);

// As route(), but an unroutable source yields a decision with no applicable task
// and the failure recorded, so it can be kept for audit.
RoutingDecision route_or_mark(const Agent& agent, const SourceRecord& source, int max_reparse = 2);

// One routed stub per applicable task and quota slot, in taxonomy order.
std::vector<TripletRecord> fan_out(const RoutingDecision& decision, std::uint32_t quota = 1);

}  // namespace editforge

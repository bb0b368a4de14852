#include "editforge/router.hpp"

#include "editforge/parsers.hpp"

namespace editforge {

RoutingDecision route(const Agent& agent, const SourceRecord& source, int max_reparse) {
  const std::string base =
      "Check the attached image against each of the 23 candidate tasks in the order listed and "
      "reply with exactly 23 lines, one per task.";
  try {
    return with_reparse(max_reparse, [&](int, const std::string& reason) {
      auto user = base;
      if (!reason.empty()) user += corrective_suffix(reason);
      const auto reply = agent.ask(agent_role::kRouter, std::nullopt,
                                   std::string(agent.bank.router()), user, {source.id});
      RoutingDecision d;
      d.source_id = source.id;
      d.verdicts = parse_router_verdicts(reply);
      return d;
    });
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError) throw;
    fail(ErrorCode::Unroutable, source.id);
  }
}

RoutingDecision route_or_mark(const Agent& agent, const SourceRecord& source, int max_reparse) {
  try {
    return route(agent, source, max_reparse);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Unroutable) throw;
    RoutingDecision d;
    d.source_id = source.id;
    for (auto& v : d.verdicts) v = {false, "unroutable"};
    d.failure = e.what();
    return d;
  }
}

std::vector<TripletRecord> fan_out(const RoutingDecision& decision, std::uint32_t quota) {
  std::vector<TripletRecord> out;
  for (const TaskId task : decision.applicable()) {
    for (std::uint32_t slot = 0; slot < quota; ++slot) {
      TripletRecord r;
      r.id = triplet_id(decision.source_id, task, slot);
      r.source_id = decision.source_id;
      r.task = task;
      r.slot = slot;
      r.status = TripletStatus::Routed;
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace editforge

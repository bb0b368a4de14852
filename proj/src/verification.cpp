#include "editforge/verification.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "editforge/blob_store.hpp"
#include "editforge/parsers.hpp"

namespace editforge {

namespace {

constexpr std::array<std::string_view, 3> kJudgeRoles = {agent_role::kJudgeF, agent_role::kJudgeC,
                                                         agent_role::kJudgeQ};

}  // namespace

ScoreTriple judge(const Agent& agent, const TripletRecord& t, const JudgeParams& params) {
  require(t.status == TripletStatus::Edited, "judge needs an edited triplet");
  require(t.edited_blob.has_value(), "judge needs the edited blob");
  const std::string base = "Editing instruction: " + t.instruction +
                           "\nThe first image is before editing and the second image is after "
                           "editing.";
  std::array<int, 3> s{};
  for (const Dimension d : kDimensions) {
    const auto i = static_cast<std::size_t>(d);
    s[i] = with_reparse(params.judge_max_retries, [&](int, const std::string& reason) {
      auto user = base;
      if (!reason.empty()) user += corrective_suffix(reason);
      const auto reply = agent.ask(kJudgeRoles[i], t.task, std::string(agent.bank.judge(t.task, d)),
                                   user, {t.source_id, *t.edited_blob});
      return parse_single_integer_score(reply, params.lenient_scores);
    });
  }
  return ScoreTriple(s[0], s[1], s[2]);
}

TripletRecord judge_record(const Agent& agent, TripletRecord t, const JudgeParams& params) {
  try {
    const auto scores = judge(agent, t, params);
    return lifecycle_advance(std::move(t), event::Scored{scores});
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::ParseError:
      case ErrorCode::Timeout:
      case ErrorCode::Exhausted:
      case ErrorCode::BadRequest:
      case ErrorCode::DecodeError:
        return lifecycle_advance(std::move(t), event::Failed{e.what()});
      default:
        throw;
    }
  }
}

Json ConsistencyReport::to_json() const {
  Json j;
  j["samples"] = samples;
  for (const Dimension d : kDimensions) {
    const auto& a = dims[static_cast<std::size_t>(d)];
    j[std::string(dimension_name(d))] = Json{{"accuracy", a.accuracy}, {"mae", a.mae}};
  }
  return j;
}

ConsistencyReport consistency(std::span<const ScoreTriple> cand, std::span<const ScoreTriple> ref) {
  if (cand.size() != ref.size() || cand.empty())
    fail(ErrorCode::LengthMismatch,
         std::to_string(cand.size()) + " candidate vs " + std::to_string(ref.size()) + " reference");
  ConsistencyReport r;
  r.samples = cand.size();
  for (std::size_t d = 0; d < 3; ++d) {
    long long agree = 0, abs_err = 0;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      const int diff = cand[i].component(d) - ref[i].component(d);
      agree += diff == 0;
      abs_err += std::abs(diff);
    }
    const auto n = static_cast<double>(cand.size());
    r.dims[d] = {static_cast<double>(agree) / n, static_cast<double>(abs_err) / n};
  }
  return r;
}

namespace {

ScoredItem scored_item(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 3) throw std::runtime_error("score array needs 3 entries");
    return {std::nullopt, ScoreTriple(j[0].get<int>(), j[1].get<int>(), j[2].get<int>())};
  }
  ScoredItem it{std::nullopt, ScoreTriple(j.at("f").get<int>(), j.at("c").get<int>(), j.at("q").get<int>())};
  if (const auto id = j.find("triplet_id"); id != j.end() && id->is_string()) it.triplet_id = id->get<std::string>();
  return it;
}

}  // namespace

std::vector<ScoredItem> read_score_file(const std::filesystem::path& p) {
  const auto text = read_text(p);
  std::vector<ScoredItem> out;
  const auto first = text.find_first_not_of(" \t\r\n");
  try {
    if (first != std::string::npos && text[first] == '[') {
      // Either one array of items or JSON Lines whose items are [f,c,q].
      const auto j = Json::parse(text, nullptr, false);
      if (!j.is_discarded() && j.is_array() && (j.empty() || !j[0].is_number())) {
        for (const auto& e : j) out.push_back(scored_item(e));
        return out;
      }
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
      auto nl = text.find('\n', pos);
      if (nl == std::string::npos) nl = text.size();
      const auto line = std::string_view(text).substr(pos, nl - pos);
      pos = nl + 1;
      if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
      out.push_back(scored_item(Json::parse(line)));
    }
  } catch (const Error& e) {
    fail(ErrorCode::DecodeError, p.string() + ": " + e.detail());
  } catch (const std::exception& e) {
    fail(ErrorCode::DecodeError, p.string() + ": " + e.what());
  }
  return out;
}

ConsistencyReport consistency_of_files(const std::filesystem::path& candidate,
                                       const std::filesystem::path& reference) {
  const auto cand = read_score_file(candidate);
  const auto ref = read_score_file(reference);
  const auto all_ids = [](const std::vector<ScoredItem>& v) {
    return !v.empty() && std::all_of(v.begin(), v.end(), [](const ScoredItem& i) { return i.triplet_id.has_value(); });
  };
  std::vector<ScoreTriple> a, b;
  if (all_ids(cand) && all_ids(ref)) {
    std::map<std::string, ScoreTriple> by_id;
    for (const auto& i : ref) by_id.insert_or_assign(*i.triplet_id, i.scores);
    if (by_id.size() != ref.size() || cand.size() != ref.size())
      fail(ErrorCode::LengthMismatch, std::to_string(cand.size()) + " candidate vs " +
                                          std::to_string(ref.size()) + " reference");
    for (const auto& i : cand) {
      const auto it = by_id.find(*i.triplet_id);
      if (it == by_id.end()) fail(ErrorCode::LengthMismatch, "no reference score for " + *i.triplet_id);
      a.push_back(i.scores);
      b.push_back(it->second);
    }
  } else {
    for (const auto& i : cand) a.push_back(i.scores);
    for (const auto& i : ref) b.push_back(i.scores);
  }
  return consistency(a, b);
}

}  // namespace editforge

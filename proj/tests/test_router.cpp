#include <doctest.h>

#include <deque>
#include <set>

#include "editforge/digest.hpp"
#include "editforge/error.hpp"
#include "editforge/parsers.hpp"
#include "editforge/router.hpp"
#include "support/fixtures.hpp"

using namespace editforge;
using namespace editforge::testing;

namespace {

SourceRecord stored_source(MockRig& rig) {
  SourceRecord s;
  s.id = rig.put_png(pattern_image(64, 64, 3));
  s.width = s.height = 64;
  return s;
}

Json sequence_rule(const std::vector<std::string>& replies) {
  Json seq = Json::array();
  for (const auto& r : replies) seq.push_back(Json{{"response", r}});
  return Json{{"match", {{"role", "router"}}}, {"sequence", seq}};
}

// Answers chat requests from a queue and keeps the user text of each request.
class RecordingTransport : public Transport {
 public:
  std::deque<std::string> replies;
  std::vector<std::string> user_texts;
  HttpResponse post(const EndpointConfig&, const HttpRequest& req) override {
    const auto body = Json::parse(req.body);
    user_texts.push_back(body.at("messages").back().at("content").at(0).at("text").get<std::string>());
    const auto text = replies.front();
    if (replies.size() > 1) replies.pop_front();
    return {200, false, Json{{"choices", {{{"message", {{"content", text}}}}}}}.dump(), {}};
  }
};

}  // namespace

TEST_CASE("all-yes routes to every task") {
  MockRig rig(Json::array({sequence_rule({router_reply({})})}));
  const auto src = stored_source(rig);
  const auto d = route(rig.agent(), src);
  CHECK(d.source_id == src.id);
  CHECK(d.applicable().size() == 23);
  CHECK_FALSE(d.failure.has_value());
  CHECK(fan_out(d).size() == 23);
}

TEST_CASE("two rejections leave 21 applicable tasks") {
  VerdictVector v;
  for (auto& x : v) x = {true, {}};
  v[task_index(TaskId::VisualBeautification)] = {false, "no human portrait"};
  v[task_index(TaskId::ActionEditing)] = {false, "no animate subject"};
  MockRig rig(Json::array({sequence_rule({render_router_verdicts(v)})}));
  const auto d = route(rig.agent(), stored_source(rig));
  CHECK(d.applicable().size() == 21);
  CHECK(d.rejected() == std::vector<TaskId>{TaskId::ActionEditing, TaskId::VisualBeautification});
  CHECK(d.verdicts[task_index(TaskId::ActionEditing)].rationale == "no animate subject");
  const auto stubs = fan_out(d);
  CHECK(stubs.size() == 21);
  CHECK(fan_out(d) == stubs);
  for (const auto& s : stubs) {
    CHECK(s.status == TripletStatus::Routed);
    CHECK(s.id == triplet_id(s.source_id, s.task, 0));
  }
}

TEST_CASE("malformed replies are re-requested with a corrective suffix") {
  TempDir tmp("router-reparse");
  BlobStore store(tmp.path());
  auto http = std::make_shared<RecordingTransport>();
  http->replies = {"sorry", "yes\nno", router_reply({TaskId::ColorChange})};
  ModelGateway::Options o;
  o.http = http;
  ModelGateway gw(store, o);
  EndpointConfig ep;
  ep.name = "chat";
  ep.base_url = "http://unused";
  SourceRecord src;
  src.id = store.put(encode_png(pattern_image(32, 32, 1)));
  const Agent agent{gw, ep, PromptBank::get("v1"), {}};

  const auto d = route(agent, src, 2);
  CHECK(d.applicable() == std::vector<TaskId>{TaskId::ColorChange});
  REQUIRE(http->user_texts.size() == 3);
  CHECK(http->user_texts[0].find("could not be used") == std::string::npos);
  CHECK(http->user_texts[1].find("could not be used (line-count-mismatch)") != std::string::npos);
  CHECK(http->user_texts[2].find("could not be used (line-count-mismatch)") != std::string::npos);
}

TEST_CASE("sources stay unroutable after the reparse budget") {
  MockRig rig(Json::array({sequence_rule({"garbage", "garbage", "garbage", router_reply({})})}));
  const auto src = stored_source(rig);
  try {
    route(rig.agent(), src, 2);
    FAIL("routed a garbage reply");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Unroutable);
    CHECK(e.detail() == src.id);
  }
  CHECK(rig.backend->request_count() == 3);

  MockRig marked_rig(Json::array({sequence_rule({"garbage"})}));
  const auto marked = route_or_mark(marked_rig.agent(), stored_source(marked_rig), 0);
  CHECK(marked.applicable().empty());
  CHECK(marked.failure.has_value());
  CHECK(fan_out(marked).empty());
  CHECK(marked_rig.backend->request_count() == 1);
}

TEST_CASE("gateway failures are not turned into Unroutable") {
  MockRig rig(Json::array({Json{{"match", {{"role", "router"}}}, {"status", 400}, {"response", ""}}}));
  try {
    route_or_mark(rig.agent(), stored_source(rig));
    FAIL("expected BadRequest");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadRequest);
  }
}

TEST_CASE("fan-out quota and stub identity") {
  RoutingDecision d;
  d.source_id = std::string(64, 'e');
  d.verdicts[task_index(TaskId::SizeChange)].applicable = true;
  d.verdicts[task_index(TaskId::StyleTransfer)].applicable = true;
  const auto stubs = fan_out(d, 3);
  REQUIRE(stubs.size() == 6);
  CHECK(stubs[0].task == TaskId::StyleTransfer);
  CHECK(stubs[2].slot == 2);
  CHECK(stubs[3].task == TaskId::SizeChange);
  std::set<std::string> ids;
  for (const auto& s : stubs) ids.insert(s.id);
  CHECK(ids.size() == 6);
  CHECK(stubs[0].id == digest_of({d.source_id, "style_transfer"}));
}

TEST_CASE("property: applicable and rejected partition the taxonomy") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    RoutingDecision d;
    d.source_id = "s";
    for (auto& v : d.verdicts) v.applicable = rng() & 1;
    const auto a = d.applicable(), r = d.rejected();
    CHECK(a.size() + r.size() == kTaskCount);
    std::set<TaskId> all(a.begin(), a.end());
    all.insert(r.begin(), r.end());
    CHECK(all.size() == kTaskCount);
    CHECK(fan_out(d).size() == a.size());
  }
}

#include <doctest.h>

#include <random>

#include "editforge/error.hpp"
#include "editforge/verification.hpp"
#include "support/fixtures.hpp"

using namespace editforge;
using namespace editforge::testing;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Ok;
}

Json judge_rules(const std::string& f, const std::string& c, const std::string& q) {
  return Json::array({Json{{"match", {{"role", "judge_f"}}}, {"response", f}},
                      Json{{"match", {{"role", "judge_c"}}}, {"response", c}},
                      Json{{"match", {{"role", "judge_q"}}}, {"response", q}}});
}

TripletRecord edited_triplet(MockRig& rig, TaskId task = TaskId::ColorChange) {
  TripletRecord r;
  r.source_id = rig.put_png(pattern_image(64, 48, 2));
  r.task = task;
  r.id = triplet_id(r.source_id, task, 0);
  r = lifecycle_advance(r, event::Instructed{"Make the car blue.", std::nullopt, std::nullopt});
  return lifecycle_advance(r, event::Edited{rig.put_png(pattern_image(64, 48, 9))});
}

std::vector<ScoreTriple> triples(std::initializer_list<std::array<int, 3>> v) {
  std::vector<ScoreTriple> out;
  for (const auto& t : v) out.emplace_back(t[0], t[1], t[2]);
  return out;
}

std::vector<ScoreTriple> random_triples(std::mt19937_64& rng, std::size_t n) {
  std::vector<ScoreTriple> out;
  for (std::size_t i = 0; i < n; ++i)
    out.emplace_back(1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3));
  return out;
}

}  // namespace

TEST_CASE("judge scores each dimension separately") {
  {
    MockRig rig(judge_rules("3", "3", "3"));
    CHECK(judge(rig.agent(), edited_triplet(rig), {}) == ScoreTriple(3, 3, 3));
    CHECK(rig.backend->request_count() == 3);
  }
  MockRig rig(judge_rules("3", "Score: 2", "2"));
  const auto t = judge_record(rig.agent(), edited_triplet(rig), {});
  CHECK(t.status == TripletStatus::Scored);
  CHECK(t.scores == ScoreTriple(3, 2, 2));
  CHECK(filter_rule(*t.scores) == FilterVerdict::Keep);
}

TEST_CASE("unparseable judge replies fail the triplet") {
  MockRig rig(judge_rules("3", "great edit!", "3"));
  const auto t = judge_record(rig.agent(), edited_triplet(rig), {});
  CHECK(t.status == TripletStatus::Failed);
  CHECK(t.failure.has_value());
  CHECK(rig.backend->request_count() == 1 + 3);  // F once, C three times, Q never

  JudgeParams strict;
  strict.lenient_scores = false;
  MockRig strict_rig(judge_rules("Score: 3", "3", "3"));
  CHECK(judge_record(strict_rig.agent(), edited_triplet(strict_rig), strict).status == TripletStatus::Failed);
}

TEST_CASE("a later reply rescues a dimension within the retry budget") {
  Json rules = judge_rules("3", "3", "3");
  rules[1] = Json{{"match", {{"role", "judge_c"}}},
                  {"sequence", Json::array({Json{{"response", "hmm"}}, Json{{"response", "2"}}})}};
  MockRig rig(rules);
  CHECK(judge(rig.agent(), edited_triplet(rig), {}) == ScoreTriple(3, 2, 3));
}

TEST_CASE("judge preconditions") {
  MockRig rig(judge_rules("3", "3", "3"));
  auto t = edited_triplet(rig);
  t = lifecycle_advance(t, event::Scored{ScoreTriple(3, 3, 3)});
  CHECK(code_of([&] { judge(rig.agent(), t, {}); }) == ErrorCode::PreconditionViolation);
}

TEST_CASE("filter rule examples and monotonicity") {
  CHECK(filter_rule(ScoreTriple(3, 3, 3)) == FilterVerdict::Keep);
  CHECK(filter_rule(ScoreTriple(2, 3, 3)) == FilterVerdict::Drop);
  CHECK(filter_rule(ScoreTriple(3, 2, 2)) == FilterVerdict::Keep);
  CHECK(filter_rule(ScoreTriple(3, 1, 3)) == FilterVerdict::Drop);
  for (int f = 1; f <= 3; ++f)
    for (int c = 1; c <= 3; ++c)
      for (int q = 1; q <= 3; ++q) {
        if (filter_rule(ScoreTriple(f, c, q)) != FilterVerdict::Keep) continue;
        for (int f2 = f; f2 <= 3; ++f2)
          for (int c2 = c; c2 <= 3; ++c2)
            for (int q2 = q; q2 <= 3; ++q2) CHECK(filter_rule(ScoreTriple(f2, c2, q2)) == FilterVerdict::Keep);
      }
}

TEST_CASE("consistency examples") {
  const auto same = triples({{3, 2, 1}, {1, 1, 1}});
  const auto r = consistency(same, same);
  for (const auto& d : r.dims) {
    CHECK(d.accuracy == 1.0);
    CHECK(d.mae == 0.0);
  }
  CHECK(r.samples == 2);

  const auto half = consistency(triples({{3, 1, 1}, {2, 1, 1}}), triples({{3, 1, 1}, {3, 1, 1}}));
  CHECK(half.dims[0].accuracy == 0.5);
  CHECK(half.dims[0].mae == 0.5);

  const auto worst = consistency(triples({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}), triples({{3, 1, 1}, {3, 1, 1}, {3, 1, 1}}));
  CHECK(worst.dims[0].accuracy == 0.0);
  CHECK(worst.dims[0].mae == 2.0);
}

TEST_CASE("consistency hand-computed four-sample cases") {
  struct Case {
    std::vector<ScoreTriple> cand, ref;
    std::array<double, 3> acc, mae;
  };
  const std::vector<Case> cases = {
      {triples({{3, 2, 1}, {2, 2, 3}, {1, 3, 3}, {3, 3, 2}}), triples({{3, 3, 3}, {3, 2, 1}, {3, 3, 3}, {2, 3, 2}}),
       {0.25, 0.75, 0.5}, {1.0, 0.25, 1.0}},
      {triples({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}, {1, 1, 1}}), triples({{3, 2, 1}, {2, 2, 2}, {3, 3, 3}, {1, 1, 1}}),
       {0.25, 0.25, 0.5}, {1.25, 1.0, 0.75}},
  };
  for (const auto& c : cases) {
    const auto r = consistency(c.cand, c.ref);
    for (std::size_t d = 0; d < 3; ++d) {
      CHECK(std::abs(r.dims[d].accuracy - c.acc[d]) <= 1e-12);
      CHECK(std::abs(r.dims[d].mae - c.mae[d]) <= 1e-12);
    }
  }
}

TEST_CASE("consistency length checks") {
  const auto a = triples({{3, 3, 3}});
  const auto b = triples({{3, 3, 3}, {1, 1, 1}});
  CHECK(code_of([&] { consistency(a, b); }) == ErrorCode::LengthMismatch);
  CHECK(code_of([&] { consistency({}, {}); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("property: reflexivity and bounds") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 50;
    const auto x = random_triples(rng, n), y = random_triples(rng, n);
    for (const auto& d : consistency(x, x).dims) {
      CHECK(d.accuracy == 1.0);
      CHECK(d.mae == 0.0);
    }
    const auto r = consistency(x, y);
    const auto back = consistency(y, x);
    for (std::size_t d = 0; d < 3; ++d) {
      CHECK(r.dims[d].accuracy >= 0.0);
      CHECK(r.dims[d].accuracy <= 1.0);
      CHECK(r.dims[d].mae >= 0.0);
      CHECK(r.dims[d].mae <= 2.0);
      if (r.dims[d].accuracy == 1.0) CHECK(r.dims[d].mae == 0.0);
      // Every disagreement costs at least 1.
      CHECK(r.dims[d].mae >= 1.0 - r.dims[d].accuracy - 1e-12);
      CHECK(r.dims[d].mae == back.dims[d].mae);
    }
  }
}

TEST_CASE("score files") {
  TempDir tmp("scores");
  write_text(tmp / "a.jsonl", "{\"triplet_id\":\"x\",\"f\":3,\"c\":2,\"q\":1}\n\n{\"triplet_id\":\"y\",\"f\":1,\"c\":1,\"q\":1}\n");
  write_text(tmp / "b.json", R"([{"triplet_id":"y","f":1,"c":1,"q":2},{"triplet_id":"x","f":3,"c":2,"q":1}])");
  write_text(tmp / "c.jsonl", "[3,2,1]\n[1,1,2]\n");
  write_text(tmp / "d.json", "[[3,2,1],[1,1,1]]");

  const auto a = read_score_file(tmp / "a.jsonl");
  REQUIRE(a.size() == 2);
  CHECK(a[0].triplet_id == std::optional<std::string>("x"));
  CHECK(a[1].scores == ScoreTriple(1, 1, 1));
  CHECK(read_score_file(tmp / "c.jsonl").size() == 2);
  CHECK(read_score_file(tmp / "d.json").size() == 2);

  const auto by_id = consistency_of_files(tmp / "a.jsonl", tmp / "b.json");
  CHECK(by_id.dims[0].accuracy == 1.0);
  CHECK(by_id.dims[2].accuracy == 0.5);
  CHECK(by_id.dims[2].mae == 0.5);
  const auto by_pos = consistency_of_files(tmp / "a.jsonl", tmp / "c.jsonl");
  CHECK(by_pos.dims[2].accuracy == 0.5);
  const auto j = by_pos.to_json();
  CHECK(j.at("samples") == 2);
  CHECK(j.at("Q").at("mae") == 0.5);

  write_text(tmp / "bad.jsonl", "{\"f\":3,\"c\":2}\n");
  CHECK(code_of([&] { read_score_file(tmp / "bad.jsonl"); }) == ErrorCode::DecodeError);
  write_text(tmp / "range.jsonl", "[4,2,1]\n");
  CHECK(code_of([&] { read_score_file(tmp / "range.jsonl"); }) == ErrorCode::DecodeError);
  write_text(tmp / "one.jsonl", "[3,3,3]\n");
  CHECK(code_of([&] { consistency_of_files(tmp / "one.jsonl", tmp / "c.jsonl"); }) == ErrorCode::LengthMismatch);
  write_text(tmp / "z.jsonl", "{\"triplet_id\":\"z\",\"f\":3,\"c\":2,\"q\":1}\n{\"triplet_id\":\"y\",\"f\":1,\"c\":1,\"q\":1}\n");
  CHECK(code_of([&] { consistency_of_files(tmp / "z.jsonl", tmp / "b.json"); }) == ErrorCode::LengthMismatch);
}

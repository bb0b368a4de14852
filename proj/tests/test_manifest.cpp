#include <doctest.h>

#include <cstdlib>
#include <thread>

#include "editforge/blob_store.hpp"
#include "editforge/error.hpp"
#include "editforge/manifest.hpp"
#include "support/fixtures.hpp"

using namespace editforge;
using namespace editforge::testing;

namespace {

LedgerEntry entry(std::string stage, std::string id, std::string_view status = ledger_status::kSucceeded,
                  std::uint32_t attempt = 1) {
  LedgerEntry e;
  e.stage = std::move(stage);
  e.record_id = std::move(id);
  e.status = std::string(status);
  e.attempt = attempt;
  return e;
}

LedgerEntry failed(std::string stage, std::string id, std::string cls, std::uint32_t attempt = 1) {
  auto e = entry(std::move(stage), std::move(id), ledger_status::kFailed, attempt);
  e.error = cls + ": boom";
  e.error_class = std::move(cls);
  return e;
}

std::size_t line_count(const fs::path& p) {
  std::error_code ec;
  if (!fs::exists(p, ec)) return 0;
  const auto t = read_text(p);
  return static_cast<std::size_t>(std::count(t.begin(), t.end(), '\n'));
}

std::string corrupt_message(const fs::path& p) {
  try {
    read_jsonl(p);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ManifestCorrupt);
    return e.detail();
  }
  return {};
}

}  // namespace

TEST_CASE("JSON Lines reading") {
  TempDir tmp("jsonl");
  CHECK(read_jsonl(tmp / "missing.jsonl").lines.empty());

  write_text(tmp / "torn.jsonl", "{\"id\":\"a\"}\n\n{\"id\":\"b\"}\n{\"id\":\"c\",\"x\":");
  const auto torn = read_jsonl(tmp / "torn.jsonl");
  CHECK(torn.lines.size() == 2);
  CHECK(torn.truncated_tail);
  CHECK(torn.valid_bytes == std::string("{\"id\":\"a\"}\n\n{\"id\":\"b\"}\n").size());

  write_text(tmp / "bad.jsonl", "{\"id\":\"a\"}\n{oops}\n{\"id\":\"c\"}\n");
  CHECK(corrupt_message(tmp / "bad.jsonl").rfind("bad.jsonl:2:", 0) == 0);
  write_text(tmp / "array.jsonl", "{\"id\":\"a\"}\n{\"id\":\"b\"}\n[1,2]\n");
  CHECK(corrupt_message(tmp / "array.jsonl").rfind("array.jsonl:3:", 0) == 0);

  write_text(tmp / "dupes.jsonl", "{\"id\":\"a\",\"v\":1}\n{\"id\":\"b\",\"v\":1}\n{\"id\":\"a\",\"v\":2}\n");
  const auto latest = read_jsonl_latest(tmp / "dupes.jsonl", "id");
  REQUIRE(latest.size() == 2);
  CHECK(latest[0].at("id") == "a");
  CHECK(latest[0].at("v") == 2);
  CHECK(latest[1].at("id") == "b");
  try {
    read_jsonl_latest(tmp / "dupes.jsonl", "nope");
    FAIL("missing key accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ManifestCorrupt);
  }
}

TEST_CASE("ledger replay keeps the latest entry per record") {
  TempDir tmp("ledger");
  const auto path = tmp / "manifest.jsonl";
  {
    ManifestWriter w(path);
    w.commit({}, failed("route", "s1", "Timeout"));
    w.commit({}, entry("route", "s2"));
    w.commit({}, entry("route", "s1", ledger_status::kSucceeded, 2));
    w.commit({}, entry("route", std::string(kStageMarkerId), ledger_status::kCompleted));
    w.commit({}, failed("verify", "t1", "ParseError"));
  }
  const auto l = Ledger::load(path);
  CHECK(l.entries().size() == 5);
  REQUIRE(l.latest("route", "s1") != nullptr);
  CHECK(l.latest("route", "s1")->attempt == 2);
  CHECK(l.latest("route", "s1")->status == "succeeded");
  CHECK(l.latest("route", "nope") == nullptr);
  CHECK(l.completed("route"));
  CHECK_FALSE(l.completed("verify"));
  const auto terminal = l.terminal_set();
  CHECK(terminal.size() == 3);
  CHECK(terminal.count({"verify", "t1", "failed", "", "ParseError"}) == 1);
  for (const auto& e : l.entries()) CHECK_FALSE(e.timestamp.empty());

  const auto round = LedgerEntry::from_json(l.latest("verify", "t1")->to_json());
  CHECK(round.error_class == std::optional<std::string>("ParseError"));
  CHECK(round.error == std::optional<std::string>("ParseError: boom"));
}

TEST_CASE("dead letters list only records whose latest entry failed") {
  TempDir tmp("dead");
  const auto path = tmp / "manifest.jsonl";
  {
    ManifestWriter w(path);
    w.commit({}, failed("synthesize", "b", "Timeout"));
    w.commit({}, failed("synthesize", "a", "Timeout"));
    w.commit({}, failed("synthesize", "c", "BadRequest"));
    w.commit({}, failed("verify", "d", "ParseError"));
    w.commit({}, entry("verify", "d", ledger_status::kSucceeded, 2));
  }
  const auto dl = dead_letter_list(path);
  CHECK(dl.size() == 1);
  const auto& s = dl.at("synthesize");
  REQUIRE(s.at("Timeout").size() == 2);
  CHECK(s.at("Timeout")[0].at("record_id") == "a");
  CHECK(s.at("Timeout")[1].at("record_id") == "b");
  CHECK(s.at("BadRequest")[0].at("error") == "BadRequest: boom");
  CHECK(dead_letter_list(tmp / "none.jsonl").empty());
}

TEST_CASE("commits are batched and data lands before the ledger") {
  TempDir tmp("batch");
  const auto ledger = tmp / "manifest.jsonl";
  const auto data = tmp / "records.jsonl";
  ManifestWriter w(ledger);
  for (std::size_t i = 1; i < ManifestWriter::kBatchEntries; ++i)
    w.commit({{data, Json{{"id", std::to_string(i)}}}}, entry("s", std::to_string(i)));
  // A slow machine may cross the interval; only a complete batch is certain.
  const auto before = line_count(ledger);
  CHECK((before == 0 || before == line_count(data)));
  w.commit({{data, Json{{"id", "64"}}}}, entry("s", "64"));
  CHECK(line_count(ledger) == 64);
  CHECK(line_count(data) == 64);
  w.commit({{data, Json{{"id", "65"}}}, {tmp / "other.jsonl", Json{{"id", "65"}}}}, entry("s", "65"));
  w.flush();
  CHECK(line_count(ledger) == 65);
  CHECK(line_count(tmp / "other.jsonl") == 1);
}

TEST_CASE("an injected fault tears the ledger and stops the writer") {
  TempDir tmp("fault");
  const auto ledger = tmp / "manifest.jsonl";
  const auto data = tmp / "records.jsonl";
  {
    ManifestWriter w(ledger, FaultPlan{"synthesize", 3}, "synthesize");
    w.commit({{data, Json{{"id", "1"}}}}, entry("synthesize", "1"));
    w.flush();
    w.commit({{data, Json{{"id", "2"}}}}, entry("synthesize", "2"));
    try {
      w.commit({{data, Json{{"id", "3"}}}}, entry("synthesize", "3"));
      FAIL("fault did not trigger");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InjectedFault);
    }
    CHECK(w.crashed());
    w.commit({{data, Json{{"id", "4"}}}}, entry("synthesize", "4"));
  }
  // Record 2 was still buffered; record 3 is half a line.
  const auto text = read_text(ledger);
  CHECK(text.back() != '\n');
  const auto l = Ledger::load(ledger);
  CHECK(l.entries().size() == 1);
  CHECK(line_count(data) == 1);

  // Reopening cuts the torn line so new entries start on a line boundary.
  {
    ManifestWriter w(ledger);
    w.commit({}, entry("synthesize", "2"));
  }
  CHECK(read_jsonl(ledger).lines.size() == 2);
  CHECK_FALSE(read_jsonl(ledger).truncated_tail);

  // A plan for another stage never fires.
  ManifestWriter other(tmp / "m2.jsonl", FaultPlan{"verify", 1}, "route");
  CHECK_NOTHROW(other.commit({}, entry("route", "x")));
}

TEST_CASE("fault plan from the environment") {
  const auto with_env = [](const char* v) {
    ::setenv("EDITFORGE_FAULT", v, 1);
    auto p = fault_plan_from_env();
    ::unsetenv("EDITFORGE_FAULT");
    return p;
  };
  const auto p = with_env("synthesize:12");
  REQUIRE(p.has_value());
  CHECK(p->stage == "synthesize");
  CHECK(p->after == 12);
  for (const char* bad : {"synthesize", ":3", "verify:0", "verify:x", "verify:3x"}) CHECK_FALSE(with_env(bad));
  CHECK_FALSE(fault_plan_from_env());
}

TEST_CASE("concurrent commits produce intact lines") {
  TempDir tmp("threads");
  const auto ledger = tmp / "manifest.jsonl";
  const auto data = tmp / "records.jsonl";
  {
    ManifestWriter w(ledger);
    std::vector<std::thread> pool;
    for (int t = 0; t < 8; ++t)
      pool.emplace_back([&, t] {
        for (int i = 0; i < 100; ++i) {
          const auto id = std::to_string(t) + "-" + std::to_string(i);
          w.commit({{data, Json{{"id", id}, {"pad", std::string(200, 'x')}}}}, entry("s", id));
        }
      });
    for (auto& th : pool) th.join();
  }
  CHECK(read_jsonl(ledger).lines.size() == 800);
  CHECK(read_jsonl_latest(data, "id").size() == 800);
  CHECK(Ledger::load(ledger).terminal_set().size() == 800);
}

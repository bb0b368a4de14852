#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <random>
#include <string>

#include "editforge/editforge.h"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Scratch {
  fs::path dir;
  explicit Scratch(const char* tag) {
    std::random_device rd;
    dir = fs::temp_directory_path() / (std::string("editforge-capi-") + tag + "-" + std::to_string(rd()));
    fs::create_directories(dir);
  }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
};

void make_fixture(const fs::path& dir, int count) {
  const auto cmd = std::string(EF_FIXTURE_TOOL) + " '" + dir.string() + "' " + std::to_string(count);
  REQUIRE(std::system(cmd.c_str()) == 0);
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::string take(char* s) {
  std::string out = s ? s : "";
  ef_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(ef_version()) == "0.1.0");
  CHECK(std::string(ef_status_name(EF_OK)) == "Ok");
  CHECK(std::string(ef_status_name(EF_CONFIG_ERROR)) == "ConfigError");
  CHECK(std::string(ef_status_name(EF_NO_CANDIDATE_BLOCKS)) == "NoCandidateBlocks");
  CHECK(ef_set_log_level("warn") == EF_OK);
  CHECK(ef_set_log_level("loud") == EF_CONFIG_ERROR);
  CHECK(std::string(ef_last_error()).find("loud") != std::string::npos);
  CHECK(ef_set_log_level("warn") == EF_OK);
  CHECK(std::string(ef_last_error()).empty());
}

TEST_CASE("prefilter through the C API") {
  int ok = -1;
  const char* reason = "unset";
  CHECK(ef_prefilter(513, 513, &ok, &reason) == EF_OK);
  CHECK(ok == 1);
  CHECK(reason == nullptr);
  CHECK(ef_prefilter(512, 800, &ok, &reason) == EF_OK);
  CHECK(ok == 0);
  CHECK(std::string(reason) == "short-side");
  CHECK(ef_prefilter(600, 1300, &ok, &reason) == EF_OK);
  CHECK(std::string(reason) == "aspect-ratio");
  CHECK(ef_prefilter(600, 1200, &ok, nullptr) == EF_OK);
  CHECK(ok == 1);
  CHECK(ef_prefilter(600, 600, nullptr, nullptr) == EF_PRECONDITION_VIOLATION);
}

TEST_CASE("pHash of files") {
  Scratch s("phash");
  make_fixture(s.dir, 1);
  std::uint64_t a = 0, b = 1;
  CHECK(ef_phash_file((s.dir / "src" / "img_000.png").c_str(), &a) == EF_OK);
  CHECK(ef_phash_file((s.dir / "src" / "img_000.png").c_str(), &b) == EF_OK);
  CHECK(a == b);
  CHECK((a >> 63) == 0);
  write(s.dir / "junk.png", "not an image");
  CHECK(ef_phash_file((s.dir / "junk.png").c_str(), &a) == EF_DECODE_ERROR);
  CHECK(ef_phash_file((s.dir / "missing.png").c_str(), &a) == EF_IO_ERROR);
  CHECK(ef_phash_file(nullptr, &a) == EF_PRECONDITION_VIOLATION);
}

TEST_CASE("pipeline run over the opaque handle") {
  Scratch s("run");
  make_fixture(s.dir, 3);
  const auto cfg = (s.dir / "config.json").string();

  ef_pipeline* p = nullptr;
  REQUIRE(ef_pipeline_open(cfg.c_str(), R"({"seed": 7})", &p) == EF_OK);
  REQUIRE(p != nullptr);
  char* out = nullptr;
  REQUIRE(ef_run_all(p, nullptr, &out) == EF_OK);
  const auto report = Json::parse(take(out));
  CHECK(report.at("kept") == 3 * 23);
  CHECK(report.at("dropped") == 0);
  CHECK(report.at("stages").size() == 7);

  REQUIRE(ef_run_stage(p, "route", nullptr, &out) == EF_OK);
  const auto again = Json::parse(take(out));
  CHECK(again.at("stage") == "route");
  CHECK(again.at("processed") == 0);

  REQUIRE(ef_stats(p, "text", &out) == EF_OK);
  CHECK(take(out).find("kept 69") != std::string::npos);
  REQUIRE(ef_stats(p, "json", &out) == EF_OK);
  CHECK(Json::parse(take(out)).at("counts").at("kept") == 69);
  CHECK(ef_stats(p, "xml", &out) == EF_CONFIG_ERROR);
  REQUIRE(ef_dead_letters(p, &out) == EF_OK);
  CHECK(Json::parse(take(out)).empty());

  CHECK(ef_run_stage(p, "paint", nullptr, &out) == EF_CONFIG_ERROR);
  CHECK(ef_run_stage(p, "route", R"({"bogus": 1})", &out) == EF_CONFIG_ERROR);
  CHECK(ef_run_stage(nullptr, "route", nullptr, &out) == EF_PRECONDITION_VIOLATION);
  ef_pipeline_close(p);
  CHECK(fs::exists(s.dir / "work" / "kept.jsonl"));
}

TEST_CASE("configuration errors surface as status codes") {
  Scratch s("config");
  ef_pipeline* p = reinterpret_cast<ef_pipeline*>(1);
  CHECK(ef_pipeline_open((s.dir / "absent.json").c_str(), nullptr, &p) == EF_CONFIG_ERROR);
  CHECK(p == nullptr);
  CHECK_FALSE(std::string(ef_last_error()).empty());
  make_fixture(s.dir, 1);
  CHECK(ef_pipeline_open((s.dir / "config.json").c_str(), "{not json", &p) == EF_CONFIG_ERROR);
  CHECK(ef_pipeline_open((s.dir / "config.json").c_str(), R"({"workers": "many"})", &p) == EF_CONFIG_ERROR);
  // Offline runs may only talk to mock endpoints.
  CHECK(ef_pipeline_open((s.dir / "config.json").c_str(),
                         R"({"endpoints": [{"name": "chat", "base_url": "http://example.invalid", "role": "chat"}]})",
                         &p) == EF_CONFIG_ERROR);
}

TEST_CASE("consistency over score files") {
  Scratch s("consistency");
  write(s.dir / "a.jsonl", "[3,2,1]\n[1,1,1]\n");
  write(s.dir / "b.jsonl", "[3,3,1]\n[1,1,3]\n");
  write(s.dir / "c.jsonl", "[3,3,1]\n");
  char* out = nullptr;
  REQUIRE(ef_consistency_files((s.dir / "a.jsonl").c_str(), (s.dir / "b.jsonl").c_str(), &out) == EF_OK);
  const auto r = Json::parse(take(out));
  CHECK(r.at("samples") == 2);
  CHECK(r.at("F").at("accuracy") == 1.0);
  CHECK(r.at("C").at("mae") == 0.5);
  CHECK(r.at("Q").at("mae") == 1.0);
  CHECK(ef_consistency_files((s.dir / "a.jsonl").c_str(), (s.dir / "c.jsonl").c_str(), &out) == EF_LENGTH_MISMATCH);
}

TEST_CASE("mock server lifecycle") {
  Scratch s("server");
  write(s.dir / "script.json", R"([{"response": "hello"}])");
  ef_mock_server* a = nullptr;
  REQUIRE(ef_mock_server_start((s.dir / "script.json").c_str(), "127.0.0.1", 0, &a) == EF_OK);
  const int port = ef_mock_server_port(a);
  CHECK(port > 0);
  ef_mock_server* b = nullptr;
  CHECK(ef_mock_server_start((s.dir / "script.json").c_str(), "127.0.0.1", port, &b) == EF_BIND_ERROR);
  CHECK(b == nullptr);
  ef_mock_server_stop(a);
  ef_mock_server_wait(a);
  ef_mock_server_free(a);
  write(s.dir / "bad.json", "{\"rules\": 3}");
  CHECK(ef_mock_server_start((s.dir / "bad.json").c_str(), nullptr, 0, &b) == EF_CONFIG_ERROR);
}

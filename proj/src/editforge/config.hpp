#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "editforge/gateway.hpp"
#include "editforge/manifest.hpp"
#include "editforge/records.hpp"

namespace editforge {

namespace fs = std::filesystem;

// Endpoint names per agent. Empty means unset; caption, variant and rewriter fall
// back to the instruction endpoint.
struct AgentMap {
  std::string router;
  std::string instruction;
  std::string rewriter;
  std::string judge;
  std::string caption;
  std::string variant;
  std::string generate;
  std::string default_edit;
  std::string text_edit;  // text-aware tasks; falls back to default_edit
  std::map<TaskId, std::string> edit_overrides;
};

struct RunConfig {
  fs::path workdir = ".";
  std::optional<fs::path> source_dir;  // ingest input when running the whole chain
  std::uint64_t seed = 0;
  bool offline = false;
  int workers = 4;
  std::optional<fs::path> mock_script;
  std::vector<EndpointConfig> endpoints;
  AgentMap agents;

  int dedup_threshold = 4;
  std::uint32_t quota = 1;
  std::uint32_t variants = 0;
  double ocr_min_conf = 0.9;
  double min_area_px = 400;
  int router_max_reparse = 2;
  int gen_max_retries = 2;
  int judge_max_retries = 2;
  std::size_t max_instruction_chars = 400;
  bool lenient_scores = true;
  double temperature = 0.2;
  int max_tokens = 1024;
  std::optional<fs::path> retrieval_fixture_dir;
  std::string prompt_bank_version = "v1";
  std::optional<FaultPlan> fault;
  std::map<TaskId, std::string> judge_families;  // task -> judge family name

  // Relative paths resolve against base_dir. Unknown keys and ill-typed values are
  // ConfigError. EDITFORGE_OFFLINE=1 forces offline.
  static RunConfig from_json(const Json& j, const fs::path& base_dir = ".");
  static RunConfig load(const fs::path& p, const Json& overrides = Json::object());

  // Endpoint invariants, unique names, agent references, offline vs non-mock,
  // mock endpoints vs script.
  void validate() const;

  const EndpointConfig& endpoint(std::string_view name) const;  // ConfigError when unknown
  const EndpointConfig& agent_endpoint(std::string_view agent) const;
  const EndpointConfig& edit_endpoint(TaskId task) const;
  bool uses_mock() const;
};

// Applies a JSON object of top-level overrides (seed, offline, workers, ...).
Json merge_overrides(Json base, const Json& overrides);

}  // namespace editforge

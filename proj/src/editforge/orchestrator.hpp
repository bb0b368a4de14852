#pragma once

#include <array>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "editforge/blob_store.hpp"
#include "editforge/config.hpp"
#include "editforge/gateway.hpp"
#include "editforge/manifest.hpp"
#include "editforge/prompt_bank.hpp"
#include "editforge/source_pool.hpp"
#include "editforge/synthesis.hpp"

namespace editforge {

enum class Stage { Ingest, Expand, Route, Synthesize, Verify, Filter, Stats };
inline constexpr std::array<Stage, 7> kStageChain = {Stage::Ingest,     Stage::Expand, Stage::Route,
                                                     Stage::Synthesize, Stage::Verify, Stage::Filter,
                                                     Stage::Stats};

std::string_view stage_name(Stage s);
std::optional<Stage> stage_from_name(std::string_view name);

// Files under the work directory.
namespace layout {
inline constexpr std::string_view kLedger = "manifest.jsonl";
inline constexpr std::string_view kPool = "pool.jsonl";
inline constexpr std::string_view kDedupIndex = "dedup.idx";
inline constexpr std::string_view kRouting = "routing.jsonl";
inline constexpr std::string_view kTriplets = "triplets.jsonl";
inline constexpr std::string_view kEdits = "edits.jsonl";
inline constexpr std::string_view kScores = "scores.jsonl";
inline constexpr std::string_view kKept = "kept.jsonl";
inline constexpr std::string_view kDropped = "dropped.jsonl";
inline constexpr std::string_view kStats = "stats.json";
}  // namespace layout

// processed = succeeded + failed; skipped counts records that already had a
// terminal entry for the stage.
struct StageReport {
  Stage stage = Stage::Ingest;
  std::uint64_t processed = 0;
  std::uint64_t succeeded = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
  Json to_json() const;
};

struct PipelineReport {
  std::vector<StageReport> stages;
  std::uint64_t kept = 0;
  std::uint64_t dropped = 0;
  Json stats;
  bool had_failures() const;
  Json to_json() const;
};

struct StageOptions {
  std::optional<fs::path> src;            // ingest input, else config source_dir
  std::optional<std::uint32_t> variants;  // expand count, else config variants
  bool retry_failed = false;              // rerun records whose latest entry failed
};

class Pipeline {
 public:
  struct Hooks {
    std::shared_ptr<Transport> http;
    ModelGateway::Sleeper sleep;
    std::shared_ptr<RetrievalProvider> retrieval;
    std::shared_ptr<OcrProvider> ocr;
  };

  // ConfigError on an invalid configuration.
  explicit Pipeline(RunConfig config, Hooks hooks = {});
  ~Pipeline();
  Pipeline(const Pipeline&) = delete;
  Pipeline& operator=(const Pipeline&) = delete;

  // ConfigError(missing-upstream) unless the upstream stage has completed.
  // ManifestCorrupt when a manifest cannot be replayed. InjectedFault when the
  // fault plan fires.
  StageReport run_stage(Stage stage, const StageOptions& opts = {});

  // The whole chain in order. Offline with a non-mock endpoint is a ConfigError.
  PipelineReport run_all(const StageOptions& opts = {});

  Json stats_document();  // recomputed from the manifests
  Json dead_letters() const;

  const RunConfig& config() const { return cfg_; }
  fs::path path(std::string_view file) const { return cfg_.workdir / file; }
  BlobStore& store() { return *store_; }
  MockBackend* mock() { return mock_.get(); }

 private:
  StageReport ingest(const StageOptions& opts);
  StageReport expand(const StageOptions& opts);
  StageReport route(const StageOptions& opts);
  StageReport synthesize(const StageOptions& opts);
  StageReport verify(const StageOptions& opts);
  StageReport filter(const StageOptions& opts);
  StageReport stats();

  RunConfig cfg_;
  Hooks hooks_;
  PromptBank bank_;
  std::unique_ptr<BlobStore> store_;
  std::shared_ptr<MockBackend> mock_;
  std::unique_ptr<ModelGateway> gateway_;
};

// Latest state of every pool record, in order of first appearance.
std::vector<SourceRecord> load_pool(const fs::path& workdir);
// Latest state of every triplet, pool order then taxonomy order then slot.
std::vector<TripletRecord> load_triplets(const fs::path& workdir);

}  // namespace editforge

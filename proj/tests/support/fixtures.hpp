#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "editforge/agent.hpp"
#include "editforge/blob_store.hpp"
#include "editforge/gateway.hpp"
#include "editforge/image.hpp"
#include "editforge/records.hpp"

namespace editforge::testing {

namespace fs = std::filesystem;

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

// Blocky random scene: a gradient plus overlapping rectangles and discs. Distinct
// seeds give unrelated pHashes.
Image pattern_image(std::uint32_t w, std::uint32_t h, std::uint64_t seed);

// Copy with per-pixel noise of at most +-amplitude and a global brightness shift.
Image perturb(const Image& img, std::uint64_t seed, int amplitude, int shift);

void write_png(const fs::path& p, const Image& img);
void write_text(const fs::path& p, const std::string& text);

// OCR block covering [x0,x1) x [y0,y1).
OcrBlock rect_block(const std::string& text, double conf, double x0, double y0, double x1, double y1);
Json ocr_json(const std::vector<OcrBlock>& blocks);

// n pool-eligible PNGs (720x540 .. 880x600) named img_000.png..., each with an
// OCR sidecar holding one "OPEN" block.
std::vector<fs::path> write_fixture_corpus(const fs::path& dir, std::size_t n, std::uint64_t seed);

inline constexpr const char* kTextInstruction = "Replace the text \"OPEN\" with \"CLOSED\".";
inline constexpr const char* kGenericInstruction = "Add a small red kite flying in the sky.";
inline constexpr const char* kReasoningQuery = "Show how this scene would look after a night of heavy snow.";
inline constexpr const char* kRewrittenCommand = "Cover the ground and rooftops with thick white snow.";
inline constexpr const char* kCaption = "A quiet street with a small shop front.";

struct MockPlan {
  std::vector<TaskId> applicable;                  // empty means every task
  std::map<TaskId, std::array<int, 3>> scores;     // per task; default (3,3,3)
  std::vector<std::string> unroutable_sources;     // router replies garbage for these ids
};

std::string router_reply(const std::vector<TaskId>& applicable);
std::string detailed_caption_reply();

// Script answering every agent of a full run.
Json pipeline_mock_script(const MockPlan& plan = {});

// Offline config over mock endpoints. `extra` keys override the defaults.
Json pipeline_config(const fs::path& workdir, const fs::path& source_dir,
                     const fs::path& mock_script, const Json& extra = Json::object());

// Writes script and config under dir and returns the config path.
fs::path write_pipeline_files(const fs::path& dir, const fs::path& source_dir,
                              const MockPlan& plan = {}, const Json& extra = Json::object());

// In-process mock backend with one endpoint per role, for agent-level tests.
struct MockRig {
  explicit MockRig(const Json& script = Json::array());

  TempDir tmp{"rig"};
  BlobStore store{tmp.path()};
  std::shared_ptr<MockBackend> backend;
  std::unique_ptr<ModelGateway> gateway;
  EndpointConfig chat, edit, generate;

  Agent agent() const;
  std::string put_png(const Image& img) { return store.put(encode_png(img)); }
};

}  // namespace editforge::testing

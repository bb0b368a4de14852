#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "editforge/agent.hpp"
#include "editforge/blob_store.hpp"
#include "editforge/records.hpp"

namespace editforge {

struct SynthesisParams {
  int gen_max_retries = 2;
  std::size_t max_instruction_chars = 400;
  double ocr_min_conf = 0.9;
  double min_area_px = 400;
};

// ---------------------------------------------------------------------------
// OCR

class OcrProvider {
 public:
  virtual ~OcrProvider() = default;
  virtual std::vector<OcrBlock> blocks(const SourceRecord& source) = 0;
};

// Reads [{text, confidence, polygon: [[x,y],...]}] from the source blob's
// ".ocr.json" sidecar. A missing sidecar means no text.
class SidecarOcrProvider final : public OcrProvider {
 public:
  explicit SidecarOcrProvider(const BlobStore& store) : store_(store) {}
  std::vector<OcrBlock> blocks(const SourceRecord& source) override;

 private:
  const BlobStore& store_;
};

inline constexpr std::string_view kOcrSidecarSuffix = ".ocr.json";

std::vector<OcrBlock> ocr_blocks_from_json(const Json& j);

// Blocks that are simple polygons with confidence >= ocr_min_conf, area >=
// min_area_px and area <= half the image.
std::vector<OcrBlock> filter_ocr_blocks(const std::vector<OcrBlock>& blocks, std::uint32_t width,
                                        std::uint32_t height, const SynthesisParams& params);

// ---------------------------------------------------------------------------
// Instructions

// User text for an instruction agent: the source caption when known.
std::string image_content_text(const SourceRecord& source);

// Instruction for a task that is neither text-aware nor reasoning.
std::string gen_instruction(const Agent& agent, TaskId task, const SourceRecord& source,
                            const SynthesisParams& params);

// The two double-quoted spans (ASCII or curly quotes) of an instruction as
// (old, new). ParseError(quote-spans) unless there are exactly two and both are
// non-empty.
std::pair<std::string, std::string> parse_quoted_spans(std::string_view instruction);

struct EditJob {
  std::string triplet_id;
  std::string command;
  std::string endpoint;
  std::optional<std::string> mask_blob;
  std::optional<std::string> glyph_blob;

  Json to_json() const;
};

struct TextWorkflowResult {
  std::string instruction;
  OcrBlock target;
  std::string old_text;
  std::string new_text;
  std::string rendered_text;  // the target block's text after the replacement
  EditJob job;
};

// Filters blocks, asks the text agent to pick one and name old/new text, then
// builds the binary mask and glyph overlay blobs. NoCandidateBlocks when no
// block survives filtering.
TextWorkflowResult text_workflow(const Agent& agent, TaskId task, const SourceRecord& source,
                                 const std::vector<OcrBlock>& ocr, BlobStore& store,
                                 const SynthesisParams& params, const std::string& triplet_id,
                                 const std::string& endpoint);

// Renders the mask and overlay for a chosen block, stores both as PNG and returns
// (mask blob, glyph blob).
std::pair<std::string, std::string> build_text_aux(const OcrBlock& target,
                                                   std::string_view rendered_text,
                                                   std::uint32_t width, std::uint32_t height,
                                                   BlobStore& store);

struct ReasoningResult {
  std::string user_query;
  std::string command;
};

// Task agent writes the reasoning query, the rewriter turns it into the command.
ReasoningResult reasoning_workflow(const Agent& instruction_agent, const Agent& rewriter,
                                   TaskId task, const SourceRecord& source,
                                   const SynthesisParams& params);

// Sends the job to the edit endpoint. Gateway failures come back as a failed
// record rather than an exception.
TripletRecord dispatch_edit(ModelGateway& gateway, const EndpointConfig& endpoint,
                            const EditJob& job, TripletRecord record, std::uint64_t seed);

}  // namespace editforge

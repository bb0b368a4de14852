#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "editforge/agent.hpp"
#include "editforge/blob_store.hpp"
#include "editforge/image.hpp"
#include "editforge/records.hpp"

namespace editforge {

// ---------------------------------------------------------------------------
// Pre-filter

enum class RejectReason { ShortSide, AspectRatio };
std::string_view reject_reason_name(RejectReason r);

struct PrefilterResult {
  std::optional<RejectReason> reject;  // empty means accept
  bool accepted() const { return !reject.has_value(); }
};

// Accept iff min(w,h) > 512 and 0.5 <= w/h <= 2 (both ratio bounds inclusive).
PrefilterResult prefilter(std::uint32_t width, std::uint32_t height);

// ---------------------------------------------------------------------------
// Caption agents

std::string caption(const Agent& agent, const std::string& blob_id, int max_reparse = 0);
DetailedCaption detailed_caption(const Agent& agent, const std::string& blob_id, int max_reparse = 0);

struct VariantResult {
  std::string line;         // the variant element
  DetailedCaption caption;  // copy of the input with that one slot replaced
};

// PreconditionViolation when (aspect, index) is not a slot of dc.
VariantResult variant_caption(const Agent& agent, const DetailedCaption& dc, Aspect aspect,
                              std::size_t index, int max_reparse = 0);

// Generation prompt: one "<Aspect>: e1; e2; ..." paragraph per aspect.
std::string flatten_caption(const DetailedCaption& dc);

// Generates an image from the flattened caption and wraps it as a synthesis
// record with the given parent. The record is not pre-filtered here.
SourceRecord synthesize_variant(ModelGateway& gateway, const EndpointConfig& generator,
                                const DetailedCaption& dc_variant, const std::string& parent_id,
                                std::uint64_t seed);

// Builds a record (id, dims, phash) for stored image bytes. DecodeError when the
// bytes are not an image.
SourceRecord make_source_record(std::span<const std::uint8_t> bytes, Origin origin,
                                std::optional<std::string> parent_id = std::nullopt);

// ---------------------------------------------------------------------------
// Retrieval

struct TextQuery {
  std::string text;
};
struct ImageQuery {
  std::string blob_id;
};
using RetrievalQuery = std::variant<TextQuery, ImageQuery>;

struct RetrievedImage {
  Bytes bytes;
  std::string label;  // provider-specific provenance, e.g. a file name
};

class RetrievalProvider {
 public:
  virtual ~RetrievalProvider() = default;
  // ProviderError when the provider itself is unusable.
  virtual std::vector<RetrievedImage> search(const RetrievalQuery& query) = 0;
};

// Returns every image file of a directory, in name order, for any query.
class FixtureProvider final : public RetrievalProvider {
 public:
  explicit FixtureProvider(std::filesystem::path dir) : dir_(std::move(dir)) {}
  std::vector<RetrievedImage> search(const RetrievalQuery& query) override;

 private:
  std::filesystem::path dir_;
};

struct Candidate {
  SourceRecord record;  // origin retrieval-text or retrieval-image, parent = query source
  Bytes bytes;
};

// Queries the provider and keeps only decodable results; the rest are logged and
// dropped.
std::vector<Candidate> retrieve(const RetrievalQuery& query, RetrievalProvider& provider,
                                const std::optional<std::string>& parent_id = std::nullopt);

}  // namespace editforge

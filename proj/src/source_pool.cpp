#include "editforge/source_pool.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>

#include "editforge/parsers.hpp"
#include "editforge/phash.hpp"

namespace editforge {

std::string_view reject_reason_name(RejectReason r) {
  return r == RejectReason::ShortSide ? "short-side" : "aspect-ratio";
}

PrefilterResult prefilter(std::uint32_t width, std::uint32_t height) {
  require(width > 0 && height > 0, "prefilter needs positive dimensions");
  if (std::min(width, height) <= 512) return {RejectReason::ShortSide};
  // 0.5 <= w/h <= 2 in exact integer arithmetic.
  const auto w = std::uint64_t{width}, h = std::uint64_t{height};
  if (2 * w < h || w > 2 * h) return {RejectReason::AspectRatio};
  return {};
}

std::string caption(const Agent& agent, const std::string& blob_id, int max_reparse) {
  return with_reparse(max_reparse, [&](int, const std::string& reason) {
    std::string user = "Describe the attached image.";
    if (!reason.empty()) user += corrective_suffix(reason);
    return parse_caption(agent.ask(agent_role::kCaption, std::nullopt,
                                   std::string(agent.bank.caption()), user, {blob_id}));
  });
}

DetailedCaption detailed_caption(const Agent& agent, const std::string& blob_id, int max_reparse) {
  return with_reparse(max_reparse, [&](int, const std::string& reason) {
    std::string user = "Describe the attached image.";
    if (!reason.empty()) user += corrective_suffix(reason);
    return parse_detailed_caption(agent.ask(agent_role::kDetailedCaption, std::nullopt,
                                            std::string(agent.bank.detailed_caption()), user,
                                            {blob_id}));
  });
}

VariantResult variant_caption(const Agent& agent, const DetailedCaption& dc, Aspect aspect,
                              std::size_t index, int max_reparse) {
  const auto& slot = dc.at(aspect);
  require(index < slot.size(), "variant element index out of range");
  const auto element = std::string(aspect_name(aspect)) + " " + std::to_string(index + 1) +
                       ". " + slot[index];
  const auto prompt = render_template(
      agent.bank.variant_caption(),
      {{"element", element}, {"detailed_caption", render_detailed_caption(dc)}});
  return with_reparse(max_reparse, [&](int, const std::string& reason) {
    auto user = prompt;
    if (!reason.empty()) user += corrective_suffix(reason);
    VariantResult out{parse_variant_line(agent.ask(agent_role::kVariantCaption, std::nullopt, {},
                                                   user, {})),
                      dc};
    out.caption.at(aspect)[index] = out.line;
    return out;
  });
}

std::string flatten_caption(const DetailedCaption& dc) {
  std::string out;
  for (std::size_t i = 0; i < kAspectCount; ++i) {
    if (i) out += "\n\n";
    out += aspect_name(static_cast<Aspect>(i));
    out += ": ";
    for (std::size_t k = 0; k < dc.aspects[i].size(); ++k) {
      if (k) out += "; ";
      out += dc.aspects[i][k];
    }
    out += '.';
  }
  return out;
}

SourceRecord make_source_record(std::span<const std::uint8_t> bytes, Origin origin,
                                std::optional<std::string> parent_id) {
  const Image img = decode_image(bytes);
  SourceRecord r;
  r.id = sha256_hex(bytes);
  r.width = img.width;
  r.height = img.height;
  r.origin = origin;
  r.parent_id = std::move(parent_id);
  r.phash = phash(img);
  return r;
}

SourceRecord synthesize_variant(ModelGateway& gateway, const EndpointConfig& generator,
                                const DetailedCaption& dc_variant, const std::string& parent_id,
                                std::uint64_t seed) {
  require(dc_variant.complete(), "variant caption must have every aspect");
  const auto blob = gateway.generate_image(generator, flatten_caption(dc_variant), seed);
  return make_source_record(gateway.store().get(blob), Origin::Synthesis, parent_id);
}

std::vector<RetrievedImage> FixtureProvider::search(const RetrievalQuery&) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir_, ec))
    fail(ErrorCode::ProviderError, "fixture directory not found: " + dir_.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir_)) {
    if (!e.is_regular_file()) continue;
    const auto ext = e.path().extension().string();
    if (ext == ".json") continue;  // sidecars
    files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<RetrievedImage> out;
  for (const auto& f : files) out.push_back({read_file(f), f.filename().string()});
  return out;
}

std::vector<Candidate> retrieve(const RetrievalQuery& query, RetrievalProvider& provider,
                                const std::optional<std::string>& parent_id) {
  const Origin origin =
      std::holds_alternative<TextQuery>(query) ? Origin::RetrievalText : Origin::RetrievalImage;
  std::vector<Candidate> out;
  for (auto& img : provider.search(query)) {
    try {
      auto rec = make_source_record(img.bytes, origin, parent_id);
      out.push_back({std::move(rec), std::move(img.bytes)});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DecodeError) throw;
      spdlog::warn("retrieval candidate {} excluded: {}", img.label, e.what());
    }
  }
  return out;
}

}  // namespace editforge

#include "editforge/synthesis.hpp"

#include <spdlog/spdlog.h>

#include <cstdio>

#include "editforge/image.hpp"
#include "editforge/parsers.hpp"
#include "editforge/raster.hpp"

namespace editforge {

namespace {

struct Span {
  std::size_t begin, end;  // content bounds, quotes excluded
};

std::vector<Span> quoted_spans(std::string_view s) {
  std::vector<Span> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '"') {
      const auto close = s.find('"', i + 1);
      if (close == std::string_view::npos) break;
      out.push_back({i + 1, close});
      i = close + 1;
      continue;
    }
    if (s.compare(i, 3, "\xE2\x80\x9C") == 0) {  // U+201C ... U+201D
      const auto close = s.find("\xE2\x80\x9D", i + 3);
      if (close == std::string_view::npos) break;
      out.push_back({i + 3, close});
      i = close + 3;
      continue;
    }
    ++i;
  }
  return out;
}

std::string render_ocr_list(const std::vector<OcrBlock>& blocks) {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    char conf[16];
    std::snprintf(conf, sizeof conf, "%.2f", blocks[i].confidence);
    out += std::to_string(i + 1) + ". \"" + blocks[i].text + "\" (confidence " + conf + ")\n";
  }
  if (!out.empty()) out.pop_back();
  return out;
}

const OcrBlock* select_block(const std::vector<OcrBlock>& blocks, const std::string& old_text) {
  for (const auto& b : blocks)
    if (b.text == old_text) return &b;
  for (const auto& b : blocks)
    if (b.text.find(old_text) != std::string::npos) return &b;
  return nullptr;
}

std::string instruction_user_text(const SourceRecord& src, const std::string& reason) {
  auto user = image_content_text(src);
  if (!reason.empty()) user += corrective_suffix(reason);
  return user;
}

}  // namespace

std::vector<OcrBlock> ocr_blocks_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::DecodeError, "OCR sidecar must be a JSON array");
  std::vector<OcrBlock> out;
  for (const auto& e : j) out.push_back(ocr_block_from_json(e));
  return out;
}

std::vector<OcrBlock> SidecarOcrProvider::blocks(const SourceRecord& source) {
  if (!store_.has_sidecar(source.id, kOcrSidecarSuffix)) return {};
  try {
    return ocr_blocks_from_json(Json::parse(read_text(store_.path(source.id, kOcrSidecarSuffix))));
  } catch (const Json::exception& e) {
    fail(ErrorCode::DecodeError, "OCR sidecar for " + source.id + ": " + e.what());
  }
}

std::vector<OcrBlock> filter_ocr_blocks(const std::vector<OcrBlock>& blocks, std::uint32_t width,
                                        std::uint32_t height, const SynthesisParams& params) {
  const double half_image = 0.5 * width * height;
  std::vector<OcrBlock> out;
  for (const auto& b : blocks) {
    if (b.confidence < 0 || b.confidence > 1 || !polygon_is_simple(b.polygon)) {
      spdlog::warn("OCR block \"{}\" ignored: invalid confidence or polygon", b.text);
      continue;
    }
    const double area = polygon_area(b.polygon);
    if (b.confidence >= params.ocr_min_conf && area >= params.min_area_px && area <= half_image &&
        !b.text.empty())
      out.push_back(b);
  }
  return out;
}

std::string image_content_text(const SourceRecord& source) {
  if (source.caption) return "Image Content: " + *source.caption + "\nOutput:";
  return "Write the instruction for the attached image.\nOutput:";
}

std::string gen_instruction(const Agent& agent, TaskId task, const SourceRecord& source,
                            const SynthesisParams& params) {
  require(!is_text_aware(task) && !is_reasoning(task),
          "gen_instruction does not handle text-aware or reasoning tasks");
  return with_reparse(params.gen_max_retries, [&](int, const std::string& reason) {
    const auto reply = agent.ask(agent_role::kInstruction, task,
                                 std::string(agent.bank.instruction(task)),
                                 instruction_user_text(source, reason), {source.id});
    return parse_single_sentence(reply, params.max_instruction_chars);
  });
}

std::pair<std::string, std::string> parse_quoted_spans(std::string_view instruction) {
  const auto spans = quoted_spans(instruction);
  if (spans.size() != 2) fail(ErrorCode::ParseError, "quote-spans");
  auto a = std::string(instruction.substr(spans[0].begin, spans[0].end - spans[0].begin));
  auto b = std::string(instruction.substr(spans[1].begin, spans[1].end - spans[1].begin));
  if (a.empty() || b.empty()) fail(ErrorCode::ParseError, "quote-spans");
  return {std::move(a), std::move(b)};
}

Json EditJob::to_json() const {
  Json j;
  j["triplet_id"] = triplet_id;
  j["command"] = command;
  j["endpoint"] = endpoint;
  j["mask"] = mask_blob ? Json(*mask_blob) : Json(nullptr);
  j["glyph"] = glyph_blob ? Json(*glyph_blob) : Json(nullptr);
  return j;
}

std::pair<std::string, std::string> build_text_aux(const OcrBlock& target,
                                                   std::string_view rendered_text,
                                                   std::uint32_t width, std::uint32_t height,
                                                   BlobStore& store) {
  const auto mask = encode_png(rasterize_mask(target.polygon, width, height));
  const auto glyph = encode_png(render_glyph_overlay(rendered_text, target.polygon, width, height));
  return {store.put(mask), store.put(glyph)};
}

TextWorkflowResult text_workflow(const Agent& agent, TaskId task, const SourceRecord& source,
                                 const std::vector<OcrBlock>& ocr, BlobStore& store,
                                 const SynthesisParams& params, const std::string& triplet_id,
                                 const std::string& endpoint) {
  require(is_text_aware(task), "text_workflow needs a text-aware task");
  const auto candidates = filter_ocr_blocks(ocr, source.width, source.height, params);
  if (candidates.empty()) fail(ErrorCode::NoCandidateBlocks, source.id);

  const auto system =
      render_template(agent.bank.instruction(task), {{"ocr_blocks", render_ocr_list(candidates)}});
  TextWorkflowResult out = with_reparse(params.gen_max_retries, [&](int, const std::string& reason) {
    const auto reply = agent.ask(agent_role::kInstruction, task, system,
                                 instruction_user_text(source, reason), {source.id});
    TextWorkflowResult r;
    r.instruction = parse_single_sentence(reply, params.max_instruction_chars);
    std::tie(r.old_text, r.new_text) = parse_quoted_spans(r.instruction);
    const OcrBlock* target = select_block(candidates, r.old_text);
    if (!target) fail(ErrorCode::ParseError, "quote-spans");
    r.target = *target;
    r.rendered_text = target->text;
    r.rendered_text.replace(r.rendered_text.find(r.old_text), r.old_text.size(), r.new_text);
    return r;
  });

  const auto [mask, glyph] = build_text_aux(out.target, out.rendered_text, source.width,
                                            source.height, store);
  out.job = {triplet_id, out.instruction, endpoint, mask, glyph};
  return out;
}

ReasoningResult reasoning_workflow(const Agent& instruction_agent, const Agent& rewriter,
                                   TaskId task, const SourceRecord& source,
                                   const SynthesisParams& params) {
  require(is_reasoning(task), "reasoning_workflow needs a knowledge-reasoning task");
  ReasoningResult out;
  out.user_query = with_reparse(params.gen_max_retries, [&](int, const std::string& reason) {
    const auto reply = instruction_agent.ask(agent_role::kInstruction, task,
                                             std::string(instruction_agent.bank.instruction(task)),
                                             instruction_user_text(source, reason), {source.id});
    return parse_single_sentence(reply, params.max_instruction_chars);
  });
  out.command = with_reparse(params.gen_max_retries, [&](int, const std::string& reason) {
    auto user = "User query: " + out.user_query + "\nOutput:";
    if (!reason.empty()) user += corrective_suffix(reason);
    const auto reply = rewriter.ask(agent_role::kRewriter, task,
                                    std::string(rewriter.bank.rewriter()), user, {source.id});
    return parse_single_sentence(reply, params.max_instruction_chars);
  });
  return out;
}

TripletRecord dispatch_edit(ModelGateway& gateway, const EndpointConfig& endpoint,
                            const EditJob& job, TripletRecord record, std::uint64_t seed) {
  require(record.status == TripletStatus::Instructed, "dispatch_edit needs an instructed record");
  try {
    const auto blob = gateway.edit_image(endpoint, record.source_id, job.command,
                                         {job.mask_blob, job.glyph_blob}, seed, record.task);
    return lifecycle_advance(std::move(record), event::Edited{blob});
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::Timeout:
      case ErrorCode::Exhausted:
      case ErrorCode::BadRequest:
      case ErrorCode::DecodeError:
        return lifecycle_advance(std::move(record), event::Failed{e.what()});
      default:
        throw;
    }
  }
}

}  // namespace editforge

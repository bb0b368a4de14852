#include "editforge/prompt_bank.hpp"

#include "editforge/error.hpp"

namespace editforge {

namespace {

namespace pt = prompt_text_v1;

// v1 task -> judge family, in taxonomy order.
constexpr std::array<std::string_view, kTaskCount> kFamilyMapV1 = {
    "Style",          "Tone",       "Viewpoint",  "Background", "Addition",   "Removal",
    "Replace",        "Action",     "Extraction", "Color",      "Material",   "Beautification",
    "Count",          "Size",       "Text",       "Text",       "Text",       "Text",
    "Perceptual",     "Symbolic",   "Social",     "Scientific", "Compositional",
};

std::size_t family_index(std::string_view name) {
  for (std::size_t i = 0; i < pt::kJudgeFamilies.size(); ++i)
    if (pt::kJudgeFamilies[i].name == name) return i;
  fail(ErrorCode::ConfigError, "unknown judge family: " + std::string(name));
}

}  // namespace

std::string_view dimension_name(Dimension d) {
  switch (d) {
    case Dimension::F: return "F";
    case Dimension::C: return "C";
    case Dimension::Q: return "Q";
  }
  return "?";
}

PromptBank::PromptBank(std::string version) : version_(std::move(version)) {
  for (std::size_t i = 0; i < kTaskCount; ++i) family_of_[i] = family_index(kFamilyMapV1[i]);
}

const PromptBank& PromptBank::get(std::string_view version) {
  if (version != "v1") fail(ErrorCode::ConfigError, "unknown prompt bank version: " + std::string(version));
  static const PromptBank v1("v1");
  return v1;
}

std::string_view PromptBank::instruction(TaskId task) const {
  return pt::kInstructionAgents[task_index(task)];
}
std::string_view PromptBank::rewriter() const { return pt::kRewriter; }
std::string_view PromptBank::caption() const { return pt::kImageCaption; }
std::string_view PromptBank::detailed_caption() const { return pt::kDetailedCaption; }
std::string_view PromptBank::variant_caption() const { return pt::kVariantCaption; }
std::string_view PromptBank::router() const { return pt::kTaskRouter; }

std::string_view PromptBank::judge_family(TaskId task) const {
  return pt::kJudgeFamilies[family_of_[task_index(task)]].name;
}

std::string_view PromptBank::judge(TaskId task, Dimension dim) const {
  return pt::kJudgeFamilies[family_of_[task_index(task)]].dims[static_cast<std::size_t>(dim)];
}

std::size_t PromptBank::judge_family_count() const { return pt::kJudgeFamilies.size(); }

void PromptBank::set_judge_family(TaskId task, std::string_view family) {
  family_of_[task_index(task)] = family_index(family);
}

std::string render_template(std::string_view tmpl,
                            const std::map<std::string, std::string, std::less<>>& vars) {
  std::string out;
  out.reserve(tmpl.size());
  std::size_t pos = 0;
  while (pos < tmpl.size()) {
    const auto open = tmpl.find("{{", pos);
    if (open == std::string_view::npos) {
      out.append(tmpl.substr(pos));
      break;
    }
    out.append(tmpl.substr(pos, open - pos));
    const auto close = tmpl.find("}}", open + 2);
    require(close != std::string_view::npos, "unterminated placeholder in template");
    const auto name = tmpl.substr(open + 2, close - open - 2);
    const auto it = vars.find(name);
    require(it != vars.end(), "no value for placeholder {{" + std::string(name) + "}}");
    out.append(it->second);
    pos = close + 2;
  }
  return out;
}

}  // namespace editforge

#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>

#include "editforge/taxonomy.hpp"

namespace editforge {

struct JudgeFamilyText {
  std::string_view name;
  std::array<std::string_view, 3> dims;  // F, C, Q
};

namespace prompt_text_v1 {
extern const std::string_view kImageCaption;
extern const std::string_view kDetailedCaption;
extern const std::string_view kVariantCaption;
extern const std::string_view kTaskRouter;
extern const std::string_view kRewriter;
extern const std::array<std::string_view, kTaskCount> kInstructionAgents;
extern const std::array<JudgeFamilyText, 20> kJudgeFamilies;
}  // namespace prompt_text_v1

enum class Dimension { F = 0, C = 1, Q = 2 };
inline constexpr std::array<Dimension, 3> kDimensions = {Dimension::F, Dimension::C, Dimension::Q};
std::string_view dimension_name(Dimension d);

// Versioned collection of every agent template: 23 instruction agents, the
// rewriter, the caption agents, the router, and the judge bank.
class PromptBank {
 public:
  // Throws ConfigError for an unknown version.
  static const PromptBank& get(std::string_view version);

  std::string_view version() const { return version_; }

  std::string_view instruction(TaskId task) const;
  std::string_view rewriter() const;
  std::string_view caption() const;
  std::string_view detailed_caption() const;
  std::string_view variant_caption() const;
  std::string_view router() const;

  // Judge family assigned to a task, and the template for one dimension.
  std::string_view judge_family(TaskId task) const;
  std::string_view judge(TaskId task, Dimension dim) const;
  std::size_t judge_family_count() const;

  // Replaces the family of one task; the family must exist in the bank.
  void set_judge_family(TaskId task, std::string_view family);

  static constexpr std::size_t kAgentCount = kTaskCount + 1;

 private:
  explicit PromptBank(std::string version);

  std::string version_;
  std::array<std::size_t, kTaskCount> family_of_;  // index into the judge family table
};

// Substitutes {{name}} placeholders. Every placeholder in the template must have
// a value; unknown or unterminated placeholders raise PreconditionViolation.
std::string render_template(std::string_view tmpl,
                            const std::map<std::string, std::string, std::less<>>& vars);

}  // namespace editforge

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace editforge {

enum class Category {
  GlobalLevel,
  ObjectLevel,
  ObjectAttribute,
  TextAware,
  KnowledgeReasoning,
  Compositional,
};

// Canonical task order. Every per-task vector in the system (router verdicts,
// prompt-bank slots, stats rows) is indexed by this enum.
enum class TaskId : std::uint8_t {
  StyleTransfer,
  ToneAdjustment,
  ViewpointTransformation,
  BackgroundReplacement,
  ObjectAddition,
  ObjectRemoval,
  ObjectReplacement,
  ActionEditing,
  PartExtraction,
  ColorChange,
  MaterialChange,
  VisualBeautification,
  CountChange,
  SizeChange,
  MoviePosterText,
  GuiInterfaceText,
  ObjectSurfaceText,
  BuildingSurfaceText,
  PerceptualReasoning,
  SymbolicReasoning,
  SocialKnowledgeReasoning,
  ScientificKnowledgeReasoning,
  CompositionalEditing,
};

inline constexpr std::size_t kTaskCount = 23;

struct TaskKind {
  TaskId id;
  std::string_view key;  // lower_snake_case identifier used in JSON and config
  std::string_view name;
  Category category;
  std::string_view definition;
};

std::span<const TaskKind> taxonomy();

const TaskKind& task_kind(TaskId id);
std::optional<TaskId> task_from_key(std::string_view key);
// Accepts either the snake_case key or the display name.
std::optional<TaskId> task_from_name(std::string_view name);

std::string_view category_name(Category c);
std::optional<Category> category_from_name(std::string_view name);

inline std::size_t task_index(TaskId id) { return static_cast<std::size_t>(id); }

inline bool is_text_aware(TaskId id) { return task_kind(id).category == Category::TextAware; }
inline bool is_reasoning(TaskId id) {
  return task_kind(id).category == Category::KnowledgeReasoning;
}

}  // namespace editforge

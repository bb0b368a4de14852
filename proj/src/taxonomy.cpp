#include "editforge/taxonomy.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "editforge/error.hpp"

namespace editforge {

namespace {

constexpr std::array<TaskKind, kTaskCount> kTaxonomy = {{
    {TaskId::StyleTransfer, "style_transfer", "Style Transfer", Category::GlobalLevel,
     "Converts the overall artistic appearance of an image into a target style while preserving "
     "its structural and semantic content."},
    {TaskId::ToneAdjustment, "tone_adjustment", "Tone Adjustment", Category::GlobalLevel,
     "Adjusts global tonal parameters such as brightness, contrast, saturation, or color "
     "temperature."},
    {TaskId::ViewpointTransformation, "viewpoint_transformation", "Viewpoint Transformation",
     Category::GlobalLevel,
     "Modifies the camera viewpoint or perspective geometry to present the scene from a new "
     "spatial angle."},
    {TaskId::BackgroundReplacement, "background_replacement", "Background Replacement",
     Category::GlobalLevel,
     "Replaces the entire background of an image while maintaining the integrity of the "
     "foreground objects."},
    {TaskId::ObjectAddition, "object_addition", "Object Addition", Category::ObjectLevel,
     "Inserts new object instances into the scene while maintaining coherent spatial "
     "relationships and lighting conditions."},
    {TaskId::ObjectRemoval, "object_removal", "Object Removal", Category::ObjectLevel,
     "Removes designated objects and reconstructs the occluded background to preserve scene "
     "realism and continuity."},
    {TaskId::ObjectReplacement, "object_replacement", "Object Replacement", Category::ObjectLevel,
     "Substitutes an existing object with another object of similar semantics, ensuring "
     "consistency in scale, pose, and contextual relevance."},
    {TaskId::ActionEditing, "action_editing", "Action Editing", Category::ObjectLevel,
     "Modifies the pose, action, or behavioral state of animate subjects (e.g., humans or "
     "animals)."},
    {TaskId::PartExtraction, "part_extraction", "Part Extraction", Category::ObjectLevel,
     "Extracts specific parts or sub-regions from a complex object, enabling fine-grained "
     "manipulation or recomposition."},
    {TaskId::ColorChange, "color_change", "Color Change", Category::ObjectAttribute,
     "Alters the color attributes of a specific object or region while preserving shading and "
     "material coherence."},
    {TaskId::MaterialChange, "material_change", "Material Change", Category::ObjectAttribute,
     "Modifies or replaces the surface texture or material properties of an object to achieve a "
     "different visual appearance."},
    {TaskId::VisualBeautification, "visual_beautification", "Visual Beautification",
     Category::ObjectAttribute,
     "Enhances or stylizes the appearance of animate subjects while maintaining identity "
     "consistency and structural realism."},
    {TaskId::CountChange, "count_change", "Count Change", Category::ObjectAttribute,
     "Adjusts the number of primary objects in the scene, including duplication, reduction, or "
     "redistribution."},
    {TaskId::SizeChange, "size_change", "Size Change", Category::ObjectAttribute,
     "Manipulates the scale or relative size of an object while preserving its geometric "
     "proportion and contextual alignment."},
    {TaskId::MoviePosterText, "movie_poster_text_editing", "Movie Poster Text Editing",
     Category::TextAware,
     "Replaces textual content appearing in movie posters while preserving stylistic coherence "
     "and typography consistency."},
    {TaskId::GuiInterfaceText, "gui_interface_text_editing", "GUI Interface Text Editing",
     Category::TextAware,
     "Modifies textual elements in application interfaces—such as labels or button names while "
     "maintaining layout integrity and interaction semantics."},
    {TaskId::ObjectSurfaceText, "object_surface_text_editing", "Object Surface Text Editing",
     Category::TextAware,
     "Alters text printed on object surfaces (e.g., daily goods, clothing) while preserving "
     "material properties and surface curvature."},
    {TaskId::BuildingSurfaceText, "building_surface_text_editing",
     "Building Surface Text Editing", Category::TextAware,
     "Edits text on architectural structures (e.g., road signs, or billboards) while ensuring "
     "geometric alignment and integration with the built environment."},
    {TaskId::PerceptualReasoning, "perceptual_reasoning", "Perceptual Reasoning",
     Category::KnowledgeReasoning,
     "Performs logically consistent modifications to natural images based on causal, spatial, or "
     "functional relationships inferred from the scene."},
    {TaskId::SymbolicReasoning, "symbolic_reasoning", "Symbolic Reasoning",
     Category::KnowledgeReasoning,
     "Applies reasoning-driven edits to abstract, symbolic, or synthetic visual scenes, ensuring "
     "internal logical consistency."},
    {TaskId::SocialKnowledgeReasoning, "social_knowledge_reasoning", "Social Knowledge Reasoning",
     Category::KnowledgeReasoning,
     "Conducts edits guided by cultural norms, social semantics, or commonsense human conventions "
     "to ensure socially coherent outcomes."},
    {TaskId::ScientificKnowledgeReasoning, "scientific_knowledge_reasoning",
     "Scientific Knowledge Reasoning", Category::KnowledgeReasoning,
     "Produces scientifically valid edits constrained by physical, biological, or chemical "
     "principles, ensuring adherence to real-world scientific laws."},
    {TaskId::CompositionalEditing, "compositional_editing", "Compositional Editing",
     Category::Compositional,
     "Complex edits composed of multiple atomic editing instructions (e.g., Object Addition, "
     "Color Change, etc.)."},
}};

constexpr std::array<std::string_view, 6> kCategoryNames = {
    "GlobalLevel", "ObjectLevel", "ObjectAttribute", "TextAware", "KnowledgeReasoning",
    "Compositional"};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

}  // namespace

std::span<const TaskKind> taxonomy() { return kTaxonomy; }

const TaskKind& task_kind(TaskId id) {
  const auto i = task_index(id);
  if (i >= kTaskCount) fail(ErrorCode::PreconditionViolation, "task id out of range");
  return kTaxonomy[i];
}

std::optional<TaskId> task_from_key(std::string_view key) {
  for (const auto& t : kTaxonomy)
    if (t.key == key) return t.id;
  return std::nullopt;
}

std::optional<TaskId> task_from_name(std::string_view name) {
  if (auto id = task_from_key(name)) return id;
  for (const auto& t : kTaxonomy)
    if (iequals(t.name, name)) return t.id;
  return std::nullopt;
}

std::string_view category_name(Category c) { return kCategoryNames[static_cast<std::size_t>(c)]; }

std::optional<Category> category_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kCategoryNames.size(); ++i)
    if (kCategoryNames[i] == name) return static_cast<Category>(i);
  return std::nullopt;
}

}  // namespace editforge

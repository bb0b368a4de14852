#pragma once

#include <array>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "editforge/taxonomy.hpp"

namespace editforge {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Source pool

enum class Origin { Seed, RetrievalImage, RetrievalText, Synthesis };

std::string_view origin_name(Origin o);
Origin origin_from_name(std::string_view name);

enum class Aspect : std::uint8_t {
  Foreground,
  Midground,
  Background,
  Style,
  LightingAndAtmosphere,
  CompositionAndRelationships,
  VisualFocusAndPerspective,
};
inline constexpr std::size_t kAspectCount = 7;

std::string_view aspect_name(Aspect a);
std::optional<Aspect> aspect_from_name(std::string_view name);

// Seven-aspect structured caption. Aspect order is fixed; each aspect holds its
// numbered elements in reply order.
struct DetailedCaption {
  std::array<std::vector<std::string>, kAspectCount> aspects;

  const std::vector<std::string>& at(Aspect a) const {
    return aspects[static_cast<std::size_t>(a)];
  }
  std::vector<std::string>& at(Aspect a) { return aspects[static_cast<std::size_t>(a)]; }

  // Every aspect has at least one element.
  bool complete() const;
  bool operator==(const DetailedCaption&) const = default;
};

struct SourceRecord {
  std::string id;  // sha256 hex of the image bytes
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  Origin origin = Origin::Seed;
  std::optional<std::string> parent_id;
  std::uint64_t phash = 0;
  std::optional<std::string> caption;
  std::optional<DetailedCaption> detailed_caption;

  bool operator==(const SourceRecord&) const = default;
};

// ---------------------------------------------------------------------------
// Scores

class ScoreTriple {
 public:
  // Throws PreconditionViolation unless every component is in [1,3].
  ScoreTriple(int f, int c, int q);

  int f() const { return f_; }
  int c() const { return c_; }
  int q() const { return q_; }
  int component(std::size_t dim) const { return dim == 0 ? f_ : dim == 1 ? c_ : q_; }
  int min() const;

  bool operator==(const ScoreTriple&) const = default;

 private:
  int f_, c_, q_;
};

enum class FilterVerdict { Keep, Drop };

// The 3/2/2 rule: f = 3 and c >= 2 and q >= 2.
FilterVerdict filter_rule(const ScoreTriple& s);

// ---------------------------------------------------------------------------
// OCR

struct Point {
  double x = 0;
  double y = 0;
  bool operator==(const Point&) const = default;
};

struct OcrBlock {
  std::string text;
  double confidence = 0;
  std::vector<Point> polygon;
  bool operator==(const OcrBlock&) const = default;
};

// ---------------------------------------------------------------------------
// Triplets

enum class TripletStatus { Routed, Instructed, Edited, Scored, Kept, Dropped, Failed };

std::string_view status_name(TripletStatus s);
TripletStatus status_from_name(std::string_view name);

struct TripletRecord {
  std::string id;
  std::string source_id;
  TaskId task = TaskId::StyleTransfer;
  std::uint32_t slot = 0;  // index within the per-task quota
  std::string instruction;
  std::optional<std::string> executable_command;
  std::optional<std::string> edited_blob;
  std::optional<OcrBlock> ocr_target;
  TripletStatus status = TripletStatus::Routed;
  std::optional<ScoreTriple> scores;
  std::optional<std::string> failure;

  bool operator==(const TripletRecord&) const = default;
};

// Stable id for the slot-th stub of (source, task). Slot 0 is digest(source || task).
std::string triplet_id(std::string_view source_id, TaskId task, std::uint32_t slot);

struct Verdict {
  bool applicable = false;
  std::string rationale;
  bool operator==(const Verdict&) const = default;
};

using VerdictVector = std::array<Verdict, kTaskCount>;

struct RoutingDecision {
  std::string source_id;
  VerdictVector verdicts;
  std::optional<std::string> failure;  // set when the source was unroutable

  std::vector<TaskId> applicable() const;
  std::vector<TaskId> rejected() const;
};

// ---------------------------------------------------------------------------
// Lifecycle

namespace event {
struct Instructed {
  std::string instruction;
  std::optional<std::string> executable_command;
  std::optional<OcrBlock> ocr_target;
};
struct Edited {
  std::string blob;
};
struct Scored {
  ScoreTriple scores;
};
struct Filter {};
struct Failed {
  std::string note;
};
}  // namespace event

using StageEvent =
    std::variant<event::Instructed, event::Edited, event::Scored, event::Filter, event::Failed>;

// Applies one event along routed -> instructed -> edited -> scored -> {kept|dropped},
// or any non-failed state -> failed. Throws IllegalTransition otherwise.
TripletRecord lifecycle_advance(TripletRecord record, const StageEvent& ev);

// Checks the record-level invariants (scores present when required, keep rule,
// executable command iff reasoning task, OCR target for text tasks).
bool triplet_invariants_hold(const TripletRecord& r);

// ---------------------------------------------------------------------------
// JSON

Json to_json(const SourceRecord& r);
SourceRecord source_from_json(const Json& j);
Json to_json(const DetailedCaption& dc);
DetailedCaption detailed_caption_from_json(const Json& j);
Json to_json(const ScoreTriple& s);
ScoreTriple scores_from_json(const Json& j);
Json to_json(const OcrBlock& b);
OcrBlock ocr_block_from_json(const Json& j);
Json to_json(const TripletRecord& r);
TripletRecord triplet_from_json(const Json& j);
Json to_json(const RoutingDecision& d);
RoutingDecision routing_from_json(const Json& j);

std::string phash_hex(std::uint64_t h);
std::uint64_t phash_from_hex(std::string_view hex);

}  // namespace editforge

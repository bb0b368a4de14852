#include "editforge/records.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

#include "editforge/digest.hpp"
#include "editforge/error.hpp"

namespace editforge {

namespace {

constexpr std::array<std::string_view, 4> kOrigins = {"seed", "retrieval-image", "retrieval-text",
                                                      "synthesis"};

constexpr std::array<std::string_view, kAspectCount> kAspects = {
    "Foreground",
    "Midground",
    "Background",
    "Style",
    "Lighting and Atmosphere",
    "Composition and Relationships",
    "Visual Focus and Perspective",
};

constexpr std::array<std::string_view, 7> kStatuses = {"routed", "instructed", "edited", "scored",
                                                       "kept",   "dropped",    "failed"};

template <typename T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> get_opt(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->template get<T>();
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

const char* event_name(const StageEvent& ev) {
  constexpr std::array<const char*, 5> kNames = {"Instructed", "Edited", "Scored", "Filter",
                                                 "Failed"};
  return kNames[ev.index()];
}

[[noreturn]] void illegal(TripletStatus from, const StageEvent& ev) {
  fail(ErrorCode::IllegalTransition, std::string(status_name(from)) + ":" + event_name(ev));
}

}  // namespace

std::string_view origin_name(Origin o) { return kOrigins[static_cast<std::size_t>(o)]; }

Origin origin_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kOrigins.size(); ++i)
    if (kOrigins[i] == name) return static_cast<Origin>(i);
  fail(ErrorCode::DecodeError, "unknown origin: " + std::string(name));
}

std::string_view aspect_name(Aspect a) { return kAspects[static_cast<std::size_t>(a)]; }

std::optional<Aspect> aspect_from_name(std::string_view name) {
  const auto want = lower(name);
  for (std::size_t i = 0; i < kAspects.size(); ++i)
    if (lower(kAspects[i]) == want) return static_cast<Aspect>(i);
  return std::nullopt;
}

bool DetailedCaption::complete() const {
  return std::all_of(aspects.begin(), aspects.end(), [](const auto& v) { return !v.empty(); });
}

ScoreTriple::ScoreTriple(int f, int c, int q) : f_(f), c_(c), q_(q) {
  const auto ok = [](int v) { return v >= 1 && v <= 3; };
  require(ok(f) && ok(c) && ok(q), "score components must lie in [1,3]");
}

int ScoreTriple::min() const { return std::min({f_, c_, q_}); }

FilterVerdict filter_rule(const ScoreTriple& s) {
  return (s.f() == 3 && s.c() >= 2 && s.q() >= 2) ? FilterVerdict::Keep : FilterVerdict::Drop;
}

std::string_view status_name(TripletStatus s) { return kStatuses[static_cast<std::size_t>(s)]; }

TripletStatus status_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kStatuses.size(); ++i)
    if (kStatuses[i] == name) return static_cast<TripletStatus>(i);
  fail(ErrorCode::DecodeError, "unknown status: " + std::string(name));
}

std::string triplet_id(std::string_view source_id, TaskId task, std::uint32_t slot) {
  const auto key = task_kind(task).key;
  if (slot == 0) return digest_of({source_id, key});
  const auto tag = "#" + std::to_string(slot);
  return digest_of({source_id, key, tag});
}

std::vector<TaskId> RoutingDecision::applicable() const {
  std::vector<TaskId> out;
  for (std::size_t i = 0; i < kTaskCount; ++i)
    if (verdicts[i].applicable) out.push_back(static_cast<TaskId>(i));
  return out;
}

std::vector<TaskId> RoutingDecision::rejected() const {
  std::vector<TaskId> out;
  for (std::size_t i = 0; i < kTaskCount; ++i)
    if (!verdicts[i].applicable) out.push_back(static_cast<TaskId>(i));
  return out;
}

TripletRecord lifecycle_advance(TripletRecord r, const StageEvent& ev) {
  using S = TripletStatus;
  if (r.status == S::Failed) illegal(r.status, ev);

  if (const auto* e = std::get_if<event::Failed>(&ev)) {
    r.status = S::Failed;
    r.failure = e->note;
    return r;
  }
  if (const auto* e = std::get_if<event::Instructed>(&ev)) {
    if (r.status != S::Routed) illegal(r.status, ev);
    require(is_reasoning(r.task) == e->executable_command.has_value(),
            "executable command is required exactly for reasoning tasks");
    require(!is_text_aware(r.task) || e->ocr_target.has_value(),
            "text-aware tasks require an OCR target");
    r.instruction = e->instruction;
    r.executable_command = e->executable_command;
    r.ocr_target = e->ocr_target;
    r.status = S::Instructed;
    return r;
  }
  if (const auto* e = std::get_if<event::Edited>(&ev)) {
    if (r.status != S::Instructed) illegal(r.status, ev);
    r.edited_blob = e->blob;
    r.status = S::Edited;
    return r;
  }
  if (const auto* e = std::get_if<event::Scored>(&ev)) {
    if (r.status != S::Edited) illegal(r.status, ev);
    r.scores = e->scores;
    r.status = S::Scored;
    return r;
  }
  // Filter
  if (r.status != S::Scored) illegal(r.status, ev);
  r.status = filter_rule(*r.scores) == FilterVerdict::Keep ? S::Kept : S::Dropped;
  return r;
}

bool triplet_invariants_hold(const TripletRecord& r) {
  using S = TripletStatus;
  const bool scored = r.status == S::Scored || r.status == S::Kept || r.status == S::Dropped;
  if (scored && !r.scores) return false;
  if (r.status == S::Kept && filter_rule(*r.scores) != FilterVerdict::Keep) return false;
  if (r.status == S::Routed || r.status == S::Failed) return true;
  if (is_reasoning(r.task) != r.executable_command.has_value()) return false;
  if (is_text_aware(r.task) && !r.ocr_target) return false;
  return true;
}

// ---------------------------------------------------------------------------
// JSON

std::string phash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t phash_from_hex(std::string_view hex) {
  if (hex.size() != 16) fail(ErrorCode::DecodeError, "phash hex must have 16 digits");
  std::uint64_t v = 0;
  for (char c : hex) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else fail(ErrorCode::DecodeError, "bad phash hex digit");
    v = (v << 4) | static_cast<std::uint64_t>(d);
  }
  return v;
}

Json to_json(const DetailedCaption& dc) {
  Json j = Json::object();
  for (std::size_t i = 0; i < kAspectCount; ++i) j[std::string(kAspects[i])] = dc.aspects[i];
  return j;
}

DetailedCaption detailed_caption_from_json(const Json& j) {
  DetailedCaption dc;
  for (std::size_t i = 0; i < kAspectCount; ++i)
    dc.aspects[i] = j.at(std::string(kAspects[i])).get<std::vector<std::string>>();
  return dc;
}

Json to_json(const SourceRecord& r) {
  Json j;
  j["id"] = r.id;
  j["width"] = r.width;
  j["height"] = r.height;
  j["origin"] = origin_name(r.origin);
  j["parent_id"] = opt(r.parent_id);
  j["phash"] = phash_hex(r.phash);
  j["caption"] = opt(r.caption);
  j["detailed_caption"] = r.detailed_caption ? to_json(*r.detailed_caption) : Json(nullptr);
  return j;
}

SourceRecord source_from_json(const Json& j) {
  SourceRecord r;
  r.id = j.at("id").get<std::string>();
  r.width = j.at("width").get<std::uint32_t>();
  r.height = j.at("height").get<std::uint32_t>();
  r.origin = origin_from_name(j.at("origin").get<std::string>());
  r.parent_id = get_opt<std::string>(j, "parent_id");
  r.phash = phash_from_hex(j.at("phash").get<std::string>());
  r.caption = get_opt<std::string>(j, "caption");
  if (const auto it = j.find("detailed_caption"); it != j.end() && !it->is_null())
    r.detailed_caption = detailed_caption_from_json(*it);
  return r;
}

Json to_json(const ScoreTriple& s) { return Json{{"f", s.f()}, {"c", s.c()}, {"q", s.q()}}; }

ScoreTriple scores_from_json(const Json& j) {
  return ScoreTriple(j.at("f").get<int>(), j.at("c").get<int>(), j.at("q").get<int>());
}

Json to_json(const OcrBlock& b) {
  Json poly = Json::array();
  for (const auto& p : b.polygon) poly.push_back(Json::array({p.x, p.y}));
  return Json{{"text", b.text}, {"confidence", b.confidence}, {"polygon", poly}};
}

OcrBlock ocr_block_from_json(const Json& j) {
  OcrBlock b;
  b.text = j.at("text").get<std::string>();
  b.confidence = j.at("confidence").get<double>();
  for (const auto& p : j.at("polygon")) {
    if (!p.is_array() || p.size() != 2) fail(ErrorCode::DecodeError, "polygon vertex must be [x,y]");
    b.polygon.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return b;
}

Json to_json(const TripletRecord& r) {
  Json j;
  j["id"] = r.id;
  j["source_id"] = r.source_id;
  j["task"] = task_kind(r.task).key;
  j["slot"] = r.slot;
  j["instruction"] = r.instruction;
  j["executable_command"] = opt(r.executable_command);
  j["edited_blob"] = opt(r.edited_blob);
  j["ocr_target"] = r.ocr_target ? to_json(*r.ocr_target) : Json(nullptr);
  j["status"] = status_name(r.status);
  j["scores"] = r.scores ? to_json(*r.scores) : Json(nullptr);
  j["failure"] = opt(r.failure);
  return j;
}

TripletRecord triplet_from_json(const Json& j) {
  TripletRecord r;
  r.id = j.at("id").get<std::string>();
  r.source_id = j.at("source_id").get<std::string>();
  const auto task = task_from_key(j.at("task").get<std::string>());
  if (!task) fail(ErrorCode::DecodeError, "unknown task: " + j.at("task").get<std::string>());
  r.task = *task;
  r.slot = j.value("slot", 0u);
  r.instruction = j.value("instruction", std::string());
  r.executable_command = get_opt<std::string>(j, "executable_command");
  r.edited_blob = get_opt<std::string>(j, "edited_blob");
  if (const auto it = j.find("ocr_target"); it != j.end() && !it->is_null())
    r.ocr_target = ocr_block_from_json(*it);
  r.status = status_from_name(j.at("status").get<std::string>());
  if (const auto it = j.find("scores"); it != j.end() && !it->is_null())
    r.scores = scores_from_json(*it);
  r.failure = get_opt<std::string>(j, "failure");
  return r;
}

Json to_json(const RoutingDecision& d) {
  Json verdicts = Json::object();
  for (std::size_t i = 0; i < kTaskCount; ++i) {
    verdicts[std::string(taxonomy()[i].key)] =
        Json{{"applicable", d.verdicts[i].applicable}, {"rationale", d.verdicts[i].rationale}};
  }
  Json j;
  j["source_id"] = d.source_id;
  j["verdicts"] = verdicts;
  j["failure"] = opt(d.failure);
  return j;
}

RoutingDecision routing_from_json(const Json& j) {
  RoutingDecision d;
  d.source_id = j.at("source_id").get<std::string>();
  const auto& v = j.at("verdicts");
  if (v.size() != kTaskCount) fail(ErrorCode::DecodeError, "routing decision must carry 23 verdicts");
  for (std::size_t i = 0; i < kTaskCount; ++i) {
    const auto& e = v.at(std::string(taxonomy()[i].key));
    d.verdicts[i] = {e.at("applicable").get<bool>(), e.value("rationale", std::string())};
  }
  d.failure = get_opt<std::string>(j, "failure");
  return d;
}

}  // namespace editforge

#include "editforge/analytics.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_map>

#include "editforge/error.hpp"

namespace editforge {

namespace {

std::string fixed2(std::uint64_t hundredths) {
  return fmt::format("{}.{:02d}", hundredths / 100, static_cast<int>(hundredths % 100));
}

void require_non_empty(std::size_t n, const char* what) {
  if (n == 0) fail(ErrorCode::EmptyInput, what);
}

Distribution three_bins(const std::array<std::uint64_t, 3>& counts, std::uint64_t total) {
  Distribution d;
  d.total = total;
  for (int s = 1; s <= 3; ++s) d.bins.push_back({std::to_string(s), counts[s - 1]});
  return d;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string> words(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u) || c == '-' || c == '\'' || u >= 0x80) {
      cur += static_cast<char>(std::tolower(u));
    } else {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
      if (c == ',' || c == '.' || c == ';' || c == '!' || c == '?' || c == '"') out.push_back(",");
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

const std::set<std::string>& determiners() {
  static const std::set<std::string> s{"the", "a", "an", "all", "any", "some", "this", "that",
                                       "these", "those", "its", "his", "her", "their", "every",
                                       "each", "one", "two", "three"};
  return s;
}

const std::set<std::string>& phrase_stops() {
  static const std::set<std::string> s{",",    "from", "on",   "in",    "at",   "with", "and",
                                       "to",   "into", "so",   "while", "near", "behind",
                                       "under", "above", "onto", "by",   "for",  "next", "that",
                                       "which", "of", "as", "over", "beside", "between"};
  return s;
}

// Noun phrase starting at i: determiners skipped, stops at a stopword, at most 3 words.
std::string phrase_at(const std::vector<std::string>& w, std::size_t i) {
  while (i < w.size() && determiners().count(w[i])) ++i;
  std::string out;
  for (std::size_t n = 0; i < w.size() && n < 3 && !phrase_stops().count(w[i]); ++i, ++n) {
    if (!out.empty()) out += ' ';
    out += w[i];
  }
  return out;
}

std::string phrase_after(const std::vector<std::string>& w, const std::set<std::string>& cues,
                         bool last = false) {
  std::optional<std::size_t> hit;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (cues.count(w[i])) {
      hit = i;
      if (!last) break;
    }
  return hit ? phrase_at(w, *hit + 1) : std::string();
}

std::vector<std::string> quoted(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while ((i = s.find('"', i)) != std::string_view::npos) {
    const auto j = s.find('"', i + 1);
    if (j == std::string_view::npos) break;
    out.emplace_back(s.substr(i + 1, j - i - 1));
    i = j + 1;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Distribution

double Distribution::percent(std::size_t i) const {
  return total == 0 ? 0.0 : 100.0 * static_cast<double>(bins[i].count) / static_cast<double>(total);
}

std::string Distribution::percent_text(std::size_t i) const {
  return half_up_percent(bins[i].count, total);
}

std::uint64_t Distribution::count_of(std::string_view label) const {
  for (const auto& b : bins)
    if (b.label == label) return b.count;
  return 0;
}

bool Distribution::exact() const {
  std::uint64_t s = 0;
  for (const auto& b : bins) s += b.count;
  return s == total && total > 0;
}

Json Distribution::to_json() const {
  Json arr = Json::array();
  for (std::size_t i = 0; i < bins.size(); ++i)
    arr.push_back(Json{{"label", bins[i].label}, {"count", bins[i].count}, {"percent", percent_text(i)}});
  return Json{{"total", total}, {"bins", arr}};
}

std::string half_up_percent(std::uint64_t count, std::uint64_t total) {
  require(total > 0, "percentage of an empty total");
  // floor(count * 10000 / total + 1/2) hundredths of a percent.
  const auto h = (count * 20000 + total) / (2 * total);
  return fixed2(h);
}

std::string half_up_ratio(std::uint64_t a, std::uint64_t b) {
  require(b > 0, "ratio with zero denominator");
  return fixed2((a * 200 + b) / (2 * b));
}

// ---------------------------------------------------------------------------
// Score tables

std::array<Distribution, 3> score_marginals(std::span<const ScoreTriple> scores) {
  require_non_empty(scores.size(), "score_marginals");
  std::array<std::array<std::uint64_t, 3>, 3> c{};
  for (const auto& s : scores)
    for (std::size_t d = 0; d < 3; ++d) ++c[d][s.component(d) - 1];
  return {three_bins(c[0], scores.size()), three_bins(c[1], scores.size()),
          three_bins(c[2], scores.size())};
}

Distribution joint_distribution(std::span<const ScoreTriple> scores) {
  require_non_empty(scores.size(), "joint_distribution");
  std::array<std::uint64_t, 27> c{};
  for (const auto& s : scores) ++c[(s.f() - 1) * 9 + (s.c() - 1) * 3 + (s.q() - 1)];
  std::vector<int> order;
  for (int i = 0; i < 27; ++i)
    if (c[i] > 0) order.push_back(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return c[a] != c[b] ? c[a] > c[b] : a > b; });
  Distribution d;
  d.total = scores.size();
  for (int i : order)
    d.bins.push_back({fmt::format("({},{},{})", i / 9 + 1, i / 3 % 3 + 1, i % 3 + 1), c[i]});
  return d;
}

Distribution min_score_distribution(std::span<const ScoreTriple> scores) {
  require_non_empty(scores.size(), "min_score_distribution");
  std::array<std::uint64_t, 3> c{};
  for (const auto& s : scores) ++c[s.min() - 1];
  return three_bins(c, scores.size());
}

CategoryDistribution category_distribution(std::span<const TripletRecord> triplets) {
  require_non_empty(triplets.size(), "category_distribution");
  std::array<std::uint64_t, kTaskCount> per_task{};
  std::array<std::uint64_t, 6> per_cat{};
  for (const auto& t : triplets) {
    ++per_task[task_index(t.task)];
    ++per_cat[static_cast<std::size_t>(task_kind(t.task).category)];
  }
  CategoryDistribution out;
  out.tasks.total = out.categories.total = triplets.size();
  for (const auto& k : taxonomy()) out.tasks.bins.push_back({std::string(k.name), per_task[task_index(k.id)]});
  for (std::size_t i = 0; i < per_cat.size(); ++i)
    out.categories.bins.push_back({std::string(category_name(static_cast<Category>(i))), per_cat[i]});
  return out;
}

Distribution aspect_ratio_table(std::span<const SourceRecord> sources) {
  require_non_empty(sources.size(), "aspect_ratio_table");
  std::map<std::uint64_t, std::uint64_t> bins;  // hundredths -> count
  for (const auto& s : sources) {
    require(s.height > 0, "aspect ratio of a zero-height source");
    ++bins[(std::uint64_t{s.width} * 200 + s.height) / (2 * std::uint64_t{s.height})];
  }
  Distribution d;
  d.total = sources.size();
  for (const auto& [h, n] : bins) d.bins.push_back({fixed2(h), n});
  return d;
}

// ---------------------------------------------------------------------------
// Entities

std::vector<std::string> rule_entity_extractor(TaskId task, std::string_view instruction) {
  const auto w = words(instruction);
  std::string e;
  switch (task) {
    case TaskId::ObjectRemoval:
      e = phrase_after(w, {"remove", "erase", "delete", "eliminate", "take"});
      break;
    case TaskId::ObjectAddition:
      e = phrase_after(w, {"add", "insert", "place", "put"});
      break;
    case TaskId::ObjectReplacement:
      e = phrase_after(w, {"with"}, true);
      break;
    case TaskId::ColorChange:
    case TaskId::MaterialChange:
    case TaskId::StyleTransfer:
    case TaskId::ToneAdjustment:
    case TaskId::BackgroundReplacement:
      e = phrase_after(w, {"to", "into"}, true);
      if (e.empty()) e = phrase_after(w, {"with"}, true);
      break;
    case TaskId::MoviePosterText:
    case TaskId::GuiInterfaceText:
    case TaskId::ObjectSurfaceText:
    case TaskId::BuildingSurfaceText: {
      const auto q = quoted(instruction);
      if (!q.empty()) e = lower(q.back());
      break;
    }
    default:
      // Phrase after the leading verb.
      if (!w.empty()) e = phrase_at(w, 1);
      break;
  }
  if (e.empty()) return {};
  return {e};
}

Concentration concentration_of(const std::vector<std::string>& entities) {
  Concentration c;
  c.entities = entities.size();
  if (entities.empty()) return c;
  std::unordered_map<std::string, std::uint64_t> freq;
  for (const auto& e : entities) ++freq[e];
  std::vector<std::uint64_t> counts;
  counts.reserve(freq.size());
  for (const auto& [_, n] : freq) counts.push_back(n);
  std::sort(counts.rbegin(), counts.rend());
  c.vocab = counts.size();
  const auto top = [&](std::size_t k) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < std::min(k, counts.size()); ++i) s += counts[i];
    return 100.0 * static_cast<double>(s) / static_cast<double>(entities.size());
  };
  c.top1 = top(1);
  c.top5 = top(5);
  c.top10 = top(10);
  c.top20 = top(20);
  return c;
}

std::map<TaskId, Concentration> entity_concentration(
    const std::map<TaskId, std::vector<std::string>>& instructions, const EntityExtractor& extractor) {
  std::size_t n = 0;
  for (const auto& [_, v] : instructions) n += v.size();
  require_non_empty(n, "entity_concentration");
  std::map<TaskId, Concentration> out;
  for (const auto& [task, list] : instructions) {
    std::vector<std::string> entities;
    for (const auto& ins : list) {
      std::vector<std::string> got;
      try {
        got = extractor(task, ins);
      } catch (const Error&) {
        throw;
      } catch (const std::exception& e) {
        fail(ErrorCode::ExtractorError, e.what());
      }
      entities.insert(entities.end(), got.begin(), got.end());
    }
    out[task] = concentration_of(entities);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Report

namespace {

Json marginals_json(std::span<const ScoreTriple> s) {
  if (s.empty()) return nullptr;
  const auto m = score_marginals(s);
  return Json{{"F", m[0].to_json()}, {"C", m[1].to_json()}, {"Q", m[2].to_json()}};
}

Json score_section(std::span<const ScoreTriple> s) {
  Json j;
  j["marginals"] = marginals_json(s);
  j["joint"] = s.empty() ? Json(nullptr) : joint_distribution(s).to_json();
  j["min_score"] = s.empty() ? Json(nullptr) : min_score_distribution(s).to_json();
  return j;
}

std::string round2(double v) {
  // Half-up on the decimal value; inputs are non-negative percentages.
  return fixed2(static_cast<std::uint64_t>(v * 100.0 + 0.5 + 1e-9));
}

}  // namespace

Json stats_document(std::span<const SourceRecord> pool, std::span<const TripletRecord> triplets) {
  std::vector<ScoreTriple> all_scores, kept_scores;
  std::vector<TripletRecord> kept;
  std::uint64_t n_kept = 0, n_dropped = 0, n_failed = 0;
  for (const auto& t : triplets) {
    if (t.scores) all_scores.push_back(*t.scores);
    if (t.status == TripletStatus::Kept) {
      ++n_kept;
      kept.push_back(t);
      kept_scores.push_back(*t.scores);
    } else if (t.status == TripletStatus::Dropped) {
      ++n_dropped;
    } else if (t.status == TripletStatus::Failed) {
      ++n_failed;
    }
  }

  Json doc;
  doc["counts"] = Json{{"sources", pool.size()},
                       {"triplets", triplets.size()},
                       {"kept", n_kept},
                       {"dropped", n_dropped},
                       {"failed", n_failed}};
  doc["scores_all"] = score_section(all_scores);
  doc["scores_kept"] = score_section(kept_scores);
  if (kept.empty()) {
    doc["task_distribution"] = nullptr;
    doc["category_distribution"] = nullptr;
  } else {
    const auto cd = category_distribution(kept);
    doc["task_distribution"] = cd.tasks.to_json();
    doc["category_distribution"] = cd.categories.to_json();
  }
  doc["aspect_ratios"] = pool.empty() ? Json(nullptr) : aspect_ratio_table(pool).to_json();

  std::map<TaskId, std::vector<std::string>> by_task;
  for (const auto& t : kept) by_task[t.task].push_back(t.instruction);
  if (by_task.empty()) {
    doc["entity_concentration"] = nullptr;
  } else {
    Json ec = Json::object();
    for (const auto& [task, c] : entity_concentration(by_task, rule_entity_extractor)) {
      ec[std::string(task_kind(task).key)] = Json{{"top1", round2(c.top1)},
                                                  {"top5", round2(c.top5)},
                                                  {"top10", round2(c.top10)},
                                                  {"top20", round2(c.top20)},
                                                  {"vocab", c.vocab},
                                                  {"entities", c.entities}};
    }
    doc["entity_concentration"] = ec;
  }
  return doc;
}

namespace {

void render_dist(std::string& out, const std::string& title, const Json& d) {
  out += title + "\n";
  if (d.is_null()) {
    out += "  (no data)\n";
    return;
  }
  std::size_t width = 5;
  for (const auto& b : d.at("bins")) width = std::max(width, b.at("label").get<std::string>().size());
  for (const auto& b : d.at("bins")) {
    out += fmt::format("  {:<{}}  {:>8}  {:>7}%\n", b.at("label").get<std::string>(), width,
                       b.at("count").get<std::uint64_t>(), b.at("percent").get<std::string>());
  }
  out += fmt::format("  {:<{}}  {:>8}\n", "total", width, d.at("total").get<std::uint64_t>());
}

}  // namespace

std::string render_stats_text(const Json& doc) {
  std::string out;
  const auto& c = doc.at("counts");
  out += fmt::format("sources {}  triplets {}  kept {}  dropped {}  failed {}\n\n",
                     c.at("sources").get<std::uint64_t>(), c.at("triplets").get<std::uint64_t>(),
                     c.at("kept").get<std::uint64_t>(), c.at("dropped").get<std::uint64_t>(),
                     c.at("failed").get<std::uint64_t>());
  for (const char* section : {"scores_all", "scores_kept"}) {
    const auto& s = doc.at(section);
    const std::string tag = std::string(section) == "scores_all" ? "all scored" : "kept";
    for (const char* dim : {"F", "C", "Q"})
      render_dist(out, fmt::format("{} marginal ({})", dim, tag),
                  s.at("marginals").is_null() ? Json(nullptr) : s.at("marginals").at(dim));
    render_dist(out, fmt::format("joint (F,C,Q) ({})", tag), s.at("joint"));
    render_dist(out, fmt::format("min score ({})", tag), s.at("min_score"));
    out += '\n';
  }
  render_dist(out, "task distribution (kept)", doc.at("task_distribution"));
  render_dist(out, "category distribution (kept)", doc.at("category_distribution"));
  render_dist(out, "aspect ratio (pool)", doc.at("aspect_ratios"));
  out += "\nentity concentration (kept)\n";
  const auto& ec = doc.at("entity_concentration");
  if (ec.is_null()) {
    out += "  (no data)\n";
  } else {
    out += fmt::format("  {:<32} {:>7} {:>7} {:>7} {:>7} {:>6}\n", "task", "top1", "top5", "top10",
                       "top20", "vocab");
    for (const auto& [task, v] : ec.items()) {
      out += fmt::format("  {:<32} {:>7} {:>7} {:>7} {:>7} {:>6}\n", task,
                         v.at("top1").get<std::string>(), v.at("top5").get<std::string>(),
                         v.at("top10").get<std::string>(), v.at("top20").get<std::string>(),
                         v.at("vocab").get<std::size_t>());
    }
  }
  return out;
}

}  // namespace editforge

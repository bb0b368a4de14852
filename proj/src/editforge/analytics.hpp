#pragma once

#include <array>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "editforge/records.hpp"

namespace editforge {

// Integer bin counts; percentages are derived, so identities between
// distributions hold exactly.
struct Distribution {
  struct Bin {
    std::string label;
    std::uint64_t count = 0;
  };
  std::vector<Bin> bins;
  std::uint64_t total = 0;

  double percent(std::size_t i) const;
  // Half-up rounding to 2 decimals, rendered like "82.80".
  std::string percent_text(std::size_t i) const;
  std::uint64_t count_of(std::string_view label) const;  // 0 when absent
  // Bin counts add up to the total, i.e. the percentages sum to exactly 100.
  bool exact() const;
  Json to_json() const;
};

// value * 100 / total, rounded half-up to 2 decimals, as "x.yy".
std::string half_up_percent(std::uint64_t count, std::uint64_t total);
// a / b rounded half-up to 2 decimals, as "x.yy".
std::string half_up_ratio(std::uint64_t a, std::uint64_t b);

// F, C, Q over {1,2,3}; zero bins kept. EmptyInput on an empty list.
std::array<Distribution, 3> score_marginals(std::span<const ScoreTriple> scores);
// Observed (f,c,q) tuples labelled "(f,c,q)", most frequent first (ties: larger
// tuple first).
Distribution joint_distribution(std::span<const ScoreTriple> scores);
// min(f,c,q) over {1,2,3}.
Distribution min_score_distribution(std::span<const ScoreTriple> scores);

struct CategoryDistribution {
  Distribution tasks;       // 23 bins, taxonomy order
  Distribution categories;  // 6 bins
};
CategoryDistribution category_distribution(std::span<const TripletRecord> triplets);

// width/height rounded half-up to 2 decimals, ascending bins.
Distribution aspect_ratio_table(std::span<const SourceRecord> sources);

struct Concentration {
  double top1 = 0, top5 = 0, top10 = 0, top20 = 0;  // cumulative percent
  std::size_t vocab = 0;
  std::uint64_t entities = 0;
};

// Entity list extracted from one instruction.
using EntityExtractor = std::function<std::vector<std::string>(TaskId, std::string_view)>;

// Pattern rules per task family: the phrase after the editing verb, the target
// colour or material after "to"/"into", the new text of a replacement, etc.
std::vector<std::string> rule_entity_extractor(TaskId task, std::string_view instruction);

Concentration concentration_of(const std::vector<std::string>& entities);

// EmptyInput when there are no instructions at all; ExtractorError when the
// extractor throws.
std::map<TaskId, Concentration> entity_concentration(
    const std::map<TaskId, std::vector<std::string>>& instructions, const EntityExtractor& extractor);

// Every statistics table over the pool and the triplet manifest.
Json stats_document(std::span<const SourceRecord> pool, std::span<const TripletRecord> triplets);
std::string render_stats_text(const Json& doc);

}  // namespace editforge

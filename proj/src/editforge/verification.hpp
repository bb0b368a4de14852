#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <span>

#include "editforge/agent.hpp"
#include "editforge/records.hpp"

namespace editforge {

struct JudgeParams {
  int judge_max_retries = 2;
  bool lenient_scores = true;
};

// Three independent judge calls (F, C, Q) on the before/after images and the
// stored instruction. Throws the last parse or gateway error.
ScoreTriple judge(const Agent& agent, const TripletRecord& triplet, const JudgeParams& params);

// judge() folded into the lifecycle: scored on success, failed otherwise.
TripletRecord judge_record(const Agent& agent, TripletRecord triplet, const JudgeParams& params);

struct DimensionAgreement {
  double accuracy = 0;
  double mae = 0;
};

struct ConsistencyReport {
  std::array<DimensionAgreement, 3> dims;  // F, C, Q
  std::size_t samples = 0;
  Json to_json() const;
};

// Per-dimension exact-agreement rate and mean absolute error over aligned lists.
// LengthMismatch when the lengths differ or are zero.
ConsistencyReport consistency(std::span<const ScoreTriple> candidate,
                              std::span<const ScoreTriple> reference);

struct ScoredItem {
  std::optional<std::string> triplet_id;
  ScoreTriple scores;
};

// A JSON array or JSON Lines of {f, c, q[, triplet_id]} objects or [f, c, q]
// arrays. DecodeError on malformed content.
std::vector<ScoredItem> read_score_file(const std::filesystem::path& p);

// consistency() over two score files. When every item of both files carries a
// triplet id they are aligned by id, else by position.
ConsistencyReport consistency_of_files(const std::filesystem::path& candidate,
                                       const std::filesystem::path& reference);

}  // namespace editforge

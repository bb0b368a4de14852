#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "editforge/records.hpp"

namespace editforge {

namespace fs = std::filesystem;

// Parsed JSON-Lines file. A final line without its newline is a torn write and is
// dropped; valid_bytes is the length of the intact prefix.
struct JsonlContents {
  std::vector<Json> lines;
  std::uintmax_t valid_bytes = 0;
  bool truncated_tail = false;
};

// Missing file reads as empty. ManifestCorrupt("<file>:<line>: ...") for any
// malformed newline-terminated line.
JsonlContents read_jsonl(const fs::path& p);

// Entries of a data manifest keyed by `key`, last line per key winning, in order of
// first appearance.
std::vector<Json> read_jsonl_latest(const fs::path& p, std::string_view key);

namespace ledger_status {
inline constexpr std::string_view kSucceeded = "succeeded";
inline constexpr std::string_view kFailed = "failed";
inline constexpr std::string_view kCompleted = "completed";  // stage marker, record_id "*"
}  // namespace ledger_status

inline constexpr std::string_view kStageMarkerId = "*";

struct LedgerEntry {
  std::string stage;
  std::string record_id;
  std::string status;
  std::uint32_t attempt = 1;
  std::string timestamp;
  std::optional<std::string> outcome;  // stage-specific detail, e.g. "duplicate"
  std::optional<std::string> error;
  std::optional<std::string> error_class;

  bool terminal() const { return status != ledger_status::kCompleted; }
  Json to_json() const;
  static LedgerEntry from_json(const Json& j);
};

std::string utc_timestamp();

// In-memory replay of the ledger. The latest entry per (stage, record) is
// authoritative.
class Ledger {
 public:
  static Ledger load(const fs::path& p);

  const LedgerEntry* latest(std::string_view stage, std::string_view record_id) const;
  bool completed(std::string_view stage) const;
  const std::vector<LedgerEntry>& entries() const { return entries_; }

  // (stage, record, status, outcome, error_class) of every latest terminal entry.
  using TerminalKey = std::tuple<std::string, std::string, std::string, std::string, std::string>;
  std::set<TerminalKey> terminal_set() const;

 private:
  std::vector<LedgerEntry> entries_;
  std::map<std::pair<std::string, std::string>, std::size_t, std::less<>> latest_;
};

// Failed records grouped as {stage: {error_class: [{record_id, error, attempt}]}}.
Json dead_letter_list(const fs::path& ledger_path);

struct FaultPlan {
  std::string stage;
  std::uint64_t after = 0;  // crash while committing the after-th record (1-based)
};

// EDITFORGE_FAULT="stage:k", if set and well formed.
std::optional<FaultPlan> fault_plan_from_env();

// Serialized appender for the ledger and its data manifests. Commits are buffered
// and flushed every 64 commits or 1 s: data files first, each fsynced, then the
// ledger. Opening a file truncates a torn trailing line.
class ManifestWriter {
 public:
  struct DataLine {
    fs::path file;
    Json line;
  };

  ManifestWriter(fs::path ledger_path, std::optional<FaultPlan> fault = std::nullopt,
                 std::string stage = {});
  ~ManifestWriter();
  ManifestWriter(const ManifestWriter&) = delete;
  ManifestWriter& operator=(const ManifestWriter&) = delete;

  // One record's outcome. Throws InjectedFault when the fault plan triggers; later
  // commits are then ignored.
  void commit(std::vector<DataLine> data, LedgerEntry entry);
  void flush();
  bool crashed() const;

  static constexpr std::size_t kBatchEntries = 64;
  static constexpr std::chrono::milliseconds kBatchInterval{1000};

 private:
  struct Pending {
    std::vector<DataLine> data;
    LedgerEntry entry;
  };
  void flush_locked();
  int fd_for(const fs::path& p);

  fs::path ledger_path_;
  std::optional<FaultPlan> fault_;
  std::string stage_;
  mutable std::mutex mu_;
  std::vector<Pending> pending_;
  std::map<fs::path, int> fds_;
  std::uint64_t commits_ = 0;
  bool crashed_ = false;
  std::chrono::steady_clock::time_point last_flush_;
};

}  // namespace editforge

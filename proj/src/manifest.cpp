#include "editforge/manifest.hpp"

#include <fcntl.h>
#include <spdlog/spdlog.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <ctime>
#include <fstream>

#include "editforge/blob_store.hpp"
#include "editforge/error.hpp"

namespace editforge {

namespace {

template <typename T>
std::optional<T> opt_field(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<T>();
}

void write_all(int fd, std::string_view data, const fs::path& p) {
  while (!data.empty()) {
    const auto n = ::write(fd, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      fail(ErrorCode::IoError, "write " + p.string() + ": " + std::strerror(errno));
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
}

// Cuts a torn trailing line so that appends start on a line boundary.
void drop_torn_tail(const fs::path& p) {
  std::error_code ec;
  if (!fs::exists(p, ec)) return;
  const auto text = read_text(p);
  if (text.empty() || text.back() == '\n') return;
  const auto keep = text.rfind('\n') == std::string::npos ? 0 : text.rfind('\n') + 1;
  spdlog::warn("{}: discarding truncated trailing line", p.string());
  fs::resize_file(p, keep);
}

}  // namespace

JsonlContents read_jsonl(const fs::path& p) {
  JsonlContents out;
  std::error_code ec;
  if (!fs::exists(p, ec)) return out;
  const auto text = read_text(p);
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    ++line_no;
    const auto nl = text.find('\n', pos);
    if (nl == std::string::npos) {
      spdlog::warn("{}:{}: discarding truncated trailing line", p.string(), line_no);
      out.truncated_tail = true;
      break;
    }
    const std::string_view line(text.data() + pos, nl - pos);
    pos = nl + 1;
    out.valid_bytes = pos;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      auto j = Json::parse(line);
      if (!j.is_object()) throw std::runtime_error("not a JSON object");
      out.lines.push_back(std::move(j));
    } catch (const std::exception& e) {
      fail(ErrorCode::ManifestCorrupt,
           p.filename().string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Json> read_jsonl_latest(const fs::path& p, std::string_view key) {
  auto contents = read_jsonl(p);
  std::map<std::string, std::size_t, std::less<>> index;
  std::vector<Json> out;
  for (auto& line : contents.lines) {
    const auto it = line.find(std::string(key));
    if (it == line.end() || !it->is_string())
      fail(ErrorCode::ManifestCorrupt, p.filename().string() + ": line without \"" + std::string(key) + "\"");
    const auto id = it->get<std::string>();
    if (const auto f = index.find(id); f != index.end()) {
      out[f->second] = std::move(line);
    } else {
      index.emplace(id, out.size());
      out.push_back(std::move(line));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ledger

Json LedgerEntry::to_json() const {
  Json j;
  j["stage"] = stage;
  j["record_id"] = record_id;
  j["status"] = status;
  j["attempt"] = attempt;
  j["timestamp"] = timestamp;
  if (outcome) j["outcome"] = *outcome;
  if (error) j["error"] = *error;
  if (error_class) j["error_class"] = *error_class;
  return j;
}

LedgerEntry LedgerEntry::from_json(const Json& j) {
  LedgerEntry e;
  e.stage = j.at("stage").get<std::string>();
  e.record_id = j.at("record_id").get<std::string>();
  e.status = j.at("status").get<std::string>();
  e.attempt = j.value("attempt", 1u);
  e.timestamp = j.value("timestamp", std::string());
  e.outcome = opt_field<std::string>(j, "outcome");
  e.error = opt_field<std::string>(j, "error");
  e.error_class = opt_field<std::string>(j, "error_class");
  return e;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const auto t = std::chrono::system_clock::to_time_t(now);
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
  char out[40];
  std::snprintf(out, sizeof out, "%s.%03dZ", buf, static_cast<int>(ms));
  return out;
}

Ledger Ledger::load(const fs::path& p) {
  Ledger l;
  const auto contents = read_jsonl(p);
  std::size_t line_no = 0;
  for (const auto& j : contents.lines) {
    ++line_no;
    try {
      l.entries_.push_back(LedgerEntry::from_json(j));
    } catch (const Json::exception& e) {
      fail(ErrorCode::ManifestCorrupt, p.filename().string() + ": entry " +
                                           std::to_string(line_no) + ": " + e.what());
    }
    const auto& e = l.entries_.back();
    l.latest_[{e.stage, e.record_id}] = l.entries_.size() - 1;
  }
  return l;
}

const LedgerEntry* Ledger::latest(std::string_view stage, std::string_view record_id) const {
  const auto it = latest_.find(std::pair<std::string, std::string>(stage, record_id));
  return it == latest_.end() ? nullptr : &entries_[it->second];
}

bool Ledger::completed(std::string_view stage) const {
  const auto* e = latest(stage, kStageMarkerId);
  return e && e->status == ledger_status::kCompleted;
}

std::set<Ledger::TerminalKey> Ledger::terminal_set() const {
  std::set<TerminalKey> out;
  for (const auto& [key, idx] : latest_) {
    const auto& e = entries_[idx];
    if (!e.terminal()) continue;
    out.emplace(e.stage, e.record_id, e.status, e.outcome.value_or(""), e.error_class.value_or(""));
  }
  return out;
}

Json dead_letter_list(const fs::path& ledger_path) {
  const auto ledger = Ledger::load(ledger_path);
  std::map<std::string, std::map<std::string, std::vector<const LedgerEntry*>>> groups;
  std::set<std::pair<std::string, std::string>> seen;
  for (auto it = ledger.entries().rbegin(); it != ledger.entries().rend(); ++it) {
    if (!seen.emplace(it->stage, it->record_id).second) continue;
    if (it->status != ledger_status::kFailed) continue;
    groups[it->stage][it->error_class.value_or("Unknown")].push_back(&*it);
  }
  Json out = Json::object();
  for (auto& [stage, by_class] : groups) {
    Json s = Json::object();
    for (auto& [cls, list] : by_class) {
      std::sort(list.begin(), list.end(),
                [](const LedgerEntry* a, const LedgerEntry* b) { return a->record_id < b->record_id; });
      Json arr = Json::array();
      for (const auto* e : list)
        arr.push_back(Json{{"record_id", e->record_id},
                           {"error", e->error.value_or("")},
                           {"attempt", e->attempt}});
      s[cls] = std::move(arr);
    }
    out[stage] = std::move(s);
  }
  return out;
}

std::optional<FaultPlan> fault_plan_from_env() {
  const char* v = std::getenv("EDITFORGE_FAULT");
  if (!v || !*v) return std::nullopt;
  const std::string s(v);
  const auto colon = s.find(':');
  if (colon == std::string::npos || colon == 0) {
    spdlog::warn("EDITFORGE_FAULT=\"{}\" ignored: expected stage:count", s);
    return std::nullopt;
  }
  char* end = nullptr;
  const auto k = std::strtoull(s.c_str() + colon + 1, &end, 10);
  if (*end != '\0' || k == 0) {
    spdlog::warn("EDITFORGE_FAULT=\"{}\" ignored: count must be a positive integer", s);
    return std::nullopt;
  }
  return FaultPlan{s.substr(0, colon), k};
}

// ---------------------------------------------------------------------------
// Writer

ManifestWriter::ManifestWriter(fs::path ledger_path, std::optional<FaultPlan> fault,
                               std::string stage)
    : ledger_path_(std::move(ledger_path)),
      fault_(std::move(fault)),
      stage_(std::move(stage)),
      last_flush_(std::chrono::steady_clock::now()) {}

ManifestWriter::~ManifestWriter() {
  try {
    flush();
  } catch (const std::exception& e) {
    spdlog::error("manifest flush on close failed: {}", e.what());
  }
  for (const auto& [_, fd] : fds_) ::close(fd);
}

int ManifestWriter::fd_for(const fs::path& p) {
  if (const auto it = fds_.find(p); it != fds_.end()) return it->second;
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  drop_torn_tail(p);
  const int fd = ::open(p.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd < 0) fail(ErrorCode::IoError, "open " + p.string() + ": " + std::strerror(errno));
  fds_.emplace(p, fd);
  return fd;
}

bool ManifestWriter::crashed() const {
  std::lock_guard lk(mu_);
  return crashed_;
}

void ManifestWriter::commit(std::vector<DataLine> data, LedgerEntry entry) {
  std::lock_guard lk(mu_);
  if (crashed_) return;
  if (entry.timestamp.empty()) entry.timestamp = utc_timestamp();
  ++commits_;
  if (fault_ && fault_->stage == stage_ && commits_ == fault_->after) {
    pending_.clear();
    const auto text = entry.to_json().dump();
    write_all(fd_for(ledger_path_), std::string_view(text).substr(0, text.size() / 2), ledger_path_);
    ::fsync(fd_for(ledger_path_));
    crashed_ = true;
    fail(ErrorCode::InjectedFault, stage_ + " after " + std::to_string(commits_) + " records");
  }
  pending_.push_back({std::move(data), std::move(entry)});
  if (pending_.size() >= kBatchEntries ||
      std::chrono::steady_clock::now() - last_flush_ >= kBatchInterval)
    flush_locked();
}

void ManifestWriter::flush() {
  std::lock_guard lk(mu_);
  if (!crashed_) flush_locked();
}

void ManifestWriter::flush_locked() {
  last_flush_ = std::chrono::steady_clock::now();
  if (pending_.empty()) return;
  std::map<fs::path, std::string> data;
  std::string ledger;
  for (const auto& p : pending_) {
    for (const auto& d : p.data) data[d.file] += d.line.dump() + "\n";
    ledger += p.entry.to_json().dump() + "\n";
  }
  for (const auto& [file, text] : data) {
    const int fd = fd_for(file);
    write_all(fd, text, file);
    ::fsync(fd);
  }
  const int fd = fd_for(ledger_path_);
  write_all(fd, ledger, ledger_path_);
  ::fsync(fd);
  pending_.clear();
}

}  // namespace editforge

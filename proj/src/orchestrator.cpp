#include "editforge/orchestrator.hpp"

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "editforge/analytics.hpp"
#include "editforge/error.hpp"
#include "editforge/phash.hpp"
#include "editforge/router.hpp"
#include "editforge/verification.hpp"

namespace editforge {

namespace {

using DataLine = ManifestWriter::DataLine;

struct Outcome {
  std::vector<DataLine> data;
  LedgerEntry entry;
};

// Errors that end the stage instead of being recorded against one record.
bool fatal(ErrorCode c) {
  return c == ErrorCode::ConfigError || c == ErrorCode::InjectedFault ||
         c == ErrorCode::ManifestCorrupt;
}

// Runs fn(0..n-1) on up to `width` threads. The first exception stops further
// scheduling and is rethrown once every thread has joined.
void parallel_for(std::size_t n, int width, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr first;
  std::mutex mu;
  const auto worker = [&] {
    while (!stop.load()) {
      const auto i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lk(mu);
        if (!first) first = std::current_exception();
        stop = true;
        return;
      }
    }
  };
  const auto threads = static_cast<std::size_t>(std::max(1, width));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(threads, n); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (first) std::rethrow_exception(first);
}

LedgerEntry succeeded(std::optional<std::string> outcome = std::nullopt) {
  LedgerEntry e;
  e.status = ledger_status::kSucceeded;
  e.outcome = std::move(outcome);
  return e;
}

LedgerEntry failed(std::string error_class, std::string error) {
  LedgerEntry e;
  e.status = ledger_status::kFailed;
  e.error_class = std::move(error_class);
  e.error = std::move(error);
  return e;
}

// "Timeout: ..." -> "Timeout".
std::string class_of_note(const std::string& note) {
  const auto p = note.find(':');
  return p == std::string::npos ? "Unknown" : note.substr(0, p);
}

struct Pick {
  std::string id;
  std::uint32_t attempt = 1;
};

// Attempt number when the record still needs this stage.
std::optional<std::uint32_t> attempt_for(const Ledger& ledger, Stage stage, const std::string& id,
                                         bool retry_failed) {
  const auto* e = ledger.latest(stage_name(stage), id);
  if (!e) return 1u;
  if (e->status == ledger_status::kFailed && retry_failed) return e->attempt + 1;
  return std::nullopt;
}

bool stage_succeeded(const Ledger& ledger, Stage stage, const std::string& id) {
  const auto* e = ledger.latest(stage_name(stage), id);
  return e && e->status == ledger_status::kSucceeded;
}

std::optional<Stage> upstream_of(Stage s) {
  switch (s) {
    case Stage::Ingest: return std::nullopt;
    case Stage::Expand: return Stage::Ingest;
    case Stage::Route: return Stage::Ingest;
    case Stage::Synthesize: return Stage::Route;
    case Stage::Verify: return Stage::Synthesize;
    case Stage::Filter: return Stage::Verify;
    case Stage::Stats: return Stage::Ingest;
  }
  return std::nullopt;
}

std::vector<fs::path> source_files(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) fail(ErrorCode::ConfigError, "source directory " + dir.string() + " does not exist");
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    if (e.path().extension() == ".json") continue;
    out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// "img.png" -> "img.ocr.json" next to it.
fs::path ocr_sidecar_of(const fs::path& image) {
  auto p = image;
  p.replace_extension(kOcrSidecarSuffix);
  return p;
}

Json edit_audit(const EditJob& job, const TripletRecord& t) {
  auto j = job.to_json();
  j["task"] = task_kind(t.task).key;
  j["edited_blob"] = t.edited_blob ? Json(*t.edited_blob) : Json(nullptr);
  return j;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string_view stage_name(Stage s) {
  static constexpr std::array<std::string_view, 7> names = {
      "ingest", "expand", "route", "synthesize", "verify", "filter", "stats"};
  return names[static_cast<std::size_t>(s)];
}

std::optional<Stage> stage_from_name(std::string_view name) {
  for (const Stage s : kStageChain)
    if (stage_name(s) == name) return s;
  return std::nullopt;
}

Json StageReport::to_json() const {
  return Json{{"stage", stage_name(stage)},
              {"processed", processed},
              {"succeeded", succeeded},
              {"failed", failed},
              {"skipped", skipped}};
}

bool PipelineReport::had_failures() const {
  return std::any_of(stages.begin(), stages.end(), [](const StageReport& r) { return r.failed > 0; });
}

Json PipelineReport::to_json() const {
  Json arr = Json::array();
  for (const auto& s : stages) arr.push_back(s.to_json());
  return Json{{"stages", arr}, {"kept", kept}, {"dropped", dropped}, {"stats", stats}};
}

std::vector<SourceRecord> load_pool(const fs::path& workdir) {
  std::vector<SourceRecord> out;
  for (const auto& j : read_jsonl_latest(workdir / layout::kPool, "id")) {
    try {
      out.push_back(source_from_json(j));
    } catch (const std::exception& e) {
      fail(ErrorCode::ManifestCorrupt, std::string(layout::kPool) + ": " + e.what());
    }
  }
  return out;
}

std::vector<TripletRecord> load_triplets(const fs::path& workdir) {
  std::vector<TripletRecord> out;
  for (const auto& j : read_jsonl_latest(workdir / layout::kTriplets, "id")) {
    try {
      out.push_back(triplet_from_json(j));
    } catch (const std::exception& e) {
      fail(ErrorCode::ManifestCorrupt, std::string(layout::kTriplets) + ": " + e.what());
    }
  }
  std::unordered_map<std::string, std::size_t> pool_index;
  for (const auto& s : load_pool(workdir)) pool_index.emplace(s.id, pool_index.size());
  const auto rank = [&](const TripletRecord& t) {
    const auto it = pool_index.find(t.source_id);
    return std::make_tuple(it == pool_index.end() ? pool_index.size() : it->second,
                           it == pool_index.end() ? t.source_id : std::string(), task_index(t.task),
                           t.slot);
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const TripletRecord& a, const TripletRecord& b) { return rank(a) < rank(b); });
  return out;
}

// ---------------------------------------------------------------------------
// Pipeline

Pipeline::Pipeline(RunConfig config, Hooks hooks)
    : cfg_(std::move(config)), hooks_(std::move(hooks)), bank_(PromptBank::get(cfg_.prompt_bank_version)) {
  cfg_.validate();
  for (const auto& [task, family] : cfg_.judge_families) bank_.set_judge_family(task, family);
  fs::create_directories(cfg_.workdir);
  store_ = std::make_unique<BlobStore>(cfg_.workdir);
  if (cfg_.uses_mock())
    mock_ = std::make_shared<MockBackend>(cfg_.mock_script ? MockScript::load(*cfg_.mock_script) : MockScript{});
  ModelGateway::Options opts;
  opts.offline = cfg_.offline;
  opts.mock = mock_;
  opts.http = hooks_.http;
  opts.sleep = hooks_.sleep;
  gateway_ = std::make_unique<ModelGateway>(*store_, std::move(opts));
  if (!hooks_.ocr) hooks_.ocr = std::make_shared<SidecarOcrProvider>(*store_);
  if (!hooks_.retrieval && cfg_.retrieval_fixture_dir)
    hooks_.retrieval = std::make_shared<FixtureProvider>(*cfg_.retrieval_fixture_dir);
}

Pipeline::~Pipeline() = default;

namespace {

struct StageContext {
  const RunConfig& cfg;
  const PromptBank& bank;
  ModelGateway& gateway;

  std::uint64_t seed_for(const std::string& record, std::string_view role, std::uint32_t attempt) const {
    return stable_hash64(fmt::format("{}|{}|{}|{}", cfg.seed, record, role, attempt));
  }

  Agent agent(const EndpointConfig& ep, const std::string& record, std::string_view role,
              std::uint32_t attempt) const {
    ChatParams p;
    p.temperature = cfg.temperature;
    p.max_tokens = cfg.max_tokens;
    p.seed = seed_for(record, role, attempt);
    return Agent{gateway, ep, bank, p};
  }

  const EndpointConfig* optional_agent(std::string_view agent) const {
    try {
      return &cfg.agent_endpoint(agent);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ConfigError) throw;
      return nullptr;
    }
  }

  int width(std::initializer_list<const EndpointConfig*> eps) const {
    int w = cfg.workers;
    for (const auto* e : eps)
      if (e) w = std::min(w, e->max_in_flight);
    return std::max(1, w);
  }

  SynthesisParams synthesis_params() const {
    SynthesisParams p;
    p.gen_max_retries = cfg.gen_max_retries;
    p.max_instruction_chars = cfg.max_instruction_chars;
    p.ocr_min_conf = cfg.ocr_min_conf;
    p.min_area_px = cfg.min_area_px;
    return p;
  }
};

// Runs `work` for every pick on the worker pool and commits each outcome.
// Non-fatal errors become failed entries via `on_error`.
template <typename Work, typename OnError>
void run_picks(Stage stage, const std::vector<Pick>& picks, int width, ManifestWriter& writer,
               StageReport& report, Work&& work, OnError&& on_error) {
  std::atomic<std::uint64_t> ok{0}, bad{0};
  parallel_for(picks.size(), width, [&](std::size_t i) {
    const auto& pick = picks[i];
    Outcome o;
    try {
      o = work(pick);
    } catch (const Error& e) {
      if (fatal(e.code())) throw;
      o = on_error(pick, std::string(error_code_name(e.code())), std::string(e.what()));
    } catch (const std::exception& e) {
      o = on_error(pick, "Internal", std::string(e.what()));
    }
    o.entry.stage = std::string(stage_name(stage));
    o.entry.record_id = pick.id;
    o.entry.attempt = pick.attempt;
    (o.entry.status == ledger_status::kFailed ? bad : ok)++;
    writer.commit(std::move(o.data), std::move(o.entry));
  });
  report.processed += picks.size();
  report.succeeded += ok;
  report.failed += bad;
}

}  // namespace

StageReport Pipeline::run_stage(Stage stage, const StageOptions& opts) {
  const auto ledger = Ledger::load(path(layout::kLedger));
  if (const auto up = upstream_of(stage); up && !ledger.completed(stage_name(*up)))
    fail(ErrorCode::ConfigError, fmt::format("missing-upstream: {} needs a completed {} stage",
                                             stage_name(stage), stage_name(*up)));
  StageReport r;
  switch (stage) {
    case Stage::Ingest: r = ingest(opts); break;
    case Stage::Expand: r = expand(opts); break;
    case Stage::Route: r = route(opts); break;
    case Stage::Synthesize: r = synthesize(opts); break;
    case Stage::Verify: r = verify(opts); break;
    case Stage::Filter: r = filter(opts); break;
    case Stage::Stats: r = stats(); break;
  }
  r.stage = stage;
  {
    ManifestWriter marker(path(layout::kLedger));
    LedgerEntry e;
    e.stage = std::string(stage_name(stage));
    e.record_id = std::string(kStageMarkerId);
    e.status = ledger_status::kCompleted;
    e.outcome = fmt::format("processed={} succeeded={} failed={} skipped={}", r.processed,
                            r.succeeded, r.failed, r.skipped);
    marker.commit({}, std::move(e));
  }
  spdlog::info("{}: processed {} succeeded {} failed {} skipped {}", stage_name(stage), r.processed,
               r.succeeded, r.failed, r.skipped);
  return r;
}

PipelineReport Pipeline::run_all(const StageOptions& opts) {
  for (const auto& e : cfg_.endpoints)
    if (cfg_.offline && !e.is_mock())
      fail(ErrorCode::ConfigError, "offline run with non-mock endpoint \"" + e.name + "\"");
  PipelineReport rep;
  for (const Stage s : kStageChain) rep.stages.push_back(run_stage(s, opts));
  for (const auto& t : load_triplets(cfg_.workdir)) {
    rep.kept += t.status == TripletStatus::Kept;
    rep.dropped += t.status == TripletStatus::Dropped;
  }
  rep.stats = Json::parse(read_text(path(layout::kStats)));
  return rep;
}

Json Pipeline::stats_document() {
  const auto pool = load_pool(cfg_.workdir);
  const auto triplets = load_triplets(cfg_.workdir);
  return editforge::stats_document(pool, triplets);
}

Json Pipeline::dead_letters() const { return dead_letter_list(path(layout::kLedger)); }

// ---------------------------------------------------------------------------
// ingest

StageReport Pipeline::ingest(const StageOptions& opts) {
  const auto src = opts.src ? opts.src : cfg_.source_dir;
  if (!src) fail(ErrorCode::ConfigError, "ingest needs a source directory");
  const auto files = source_files(*src);
  const auto ledger = Ledger::load(path(layout::kLedger));
  const auto pool = load_pool(cfg_.workdir);

  DedupIndex index(cfg_.dedup_threshold);
  std::unordered_set<std::string> in_pool;
  for (const auto& s : pool) {
    index.admit(s.phash, s.id);
    in_pool.insert(s.id);
  }

  struct Probe {
    std::string id;
    std::optional<std::uint32_t> attempt;
    std::optional<SourceRecord> record;
    std::optional<std::string> error;
  };
  std::vector<Probe> probes(files.size());
  parallel_for(files.size(), cfg_.workers, [&](std::size_t i) {
    const auto bytes = read_file(files[i]);
    auto& p = probes[i];
    p.id = sha256_hex(bytes);
    p.attempt = attempt_for(ledger, Stage::Ingest, p.id, opts.retry_failed);
    if (!p.attempt) return;
    try {
      p.record = make_source_record(bytes, Origin::Seed);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DecodeError) throw;
      p.error = e.what();
    }
  });

  StageReport rep;
  ManifestWriter writer(path(layout::kLedger), cfg_.fault, std::string(stage_name(Stage::Ingest)));
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < files.size(); ++i) {
    auto& p = probes[i];
    if (!p.attempt || !seen.insert(p.id).second) {
      ++rep.skipped;
      continue;
    }
    ++rep.processed;
    LedgerEntry e;
    std::vector<DataLine> data;
    if (p.error) {
      e = failed("DecodeError", *p.error);
      ++rep.failed;
    } else {
      const auto& rec = *p.record;
      const auto pf = prefilter(rec.width, rec.height);
      if (!pf.accepted()) {
        e = succeeded("rejected:" + std::string(reject_reason_name(*pf.reject)));
      } else if (in_pool.count(rec.id)) {
        e = succeeded("ok");
      } else if (const auto near = index.find_near(rec.phash)) {
        e = succeeded("duplicate:" + *near);
      } else {
        index.admit(rec.phash, rec.id);
        in_pool.insert(rec.id);
        store_->put(read_file(files[i]));
        e = succeeded("ok");
        data.push_back({path(layout::kPool), to_json(rec)});
      }
      if (e.outcome == "ok") {
        const auto sidecar = ocr_sidecar_of(files[i]);
        if (fs::exists(sidecar)) store_->put_sidecar(rec.id, kOcrSidecarSuffix, read_text(sidecar));
      }
      ++rep.succeeded;
    }
    e.stage = std::string(stage_name(Stage::Ingest));
    e.record_id = p.id;
    e.attempt = *p.attempt;
    writer.commit(std::move(data), std::move(e));
  }
  writer.flush();
  write_file_atomic(path(layout::kDedupIndex), index.to_json().dump(2) + "\n");
  return rep;
}

// ---------------------------------------------------------------------------
// expand

StageReport Pipeline::expand(const StageOptions& opts) {
  const std::uint32_t variants = opts.variants.value_or(cfg_.variants);
  StageReport rep;
  if (variants == 0 && !hooks_.retrieval) return rep;

  StageContext ctx{cfg_, bank_, *gateway_};
  const auto ledger = Ledger::load(path(layout::kLedger));
  const auto pool = load_pool(cfg_.workdir);
  const EndpointConfig* caption_ep = variants > 0 ? &cfg_.agent_endpoint("caption") : nullptr;
  const EndpointConfig* variant_ep = variants > 0 ? &cfg_.agent_endpoint("variant") : nullptr;
  const EndpointConfig* generate_ep = variants > 0 ? &cfg_.agent_endpoint("generate") : nullptr;

  DedupIndex index(cfg_.dedup_threshold);
  std::unordered_set<std::string> in_pool;
  for (const auto& s : pool) {
    index.admit(s.phash, s.id);
    in_pool.insert(s.id);
  }

  struct Work {
    const SourceRecord* parent;
    std::uint32_t attempt;
    SourceRecord updated;
    bool parent_changed = false;
    std::vector<Candidate> children;  // bytes empty when the gateway already stored them
    std::optional<std::pair<std::string, std::string>> error;
  };
  std::vector<Work> work;
  for (const auto& s : pool) {
    if (s.origin != Origin::Seed) continue;
    if (const auto a = attempt_for(ledger, Stage::Expand, s.id, opts.retry_failed))
      work.push_back({&s, *a, s, false, {}, std::nullopt});
    else
      ++rep.skipped;
  }

  parallel_for(work.size(), ctx.width({caption_ep, variant_ep, generate_ep}), [&](std::size_t i) {
    auto& w = work[i];
    try {
      if (variants > 0) {
        if (!w.updated.detailed_caption) {
          w.updated.detailed_caption =
              detailed_caption(ctx.agent(*caption_ep, w.parent->id, agent_role::kDetailedCaption, w.attempt),
                               w.parent->id, cfg_.gen_max_retries);
          w.parent_changed = true;
        }
        const auto& dc = *w.updated.detailed_caption;
        std::vector<std::pair<Aspect, std::size_t>> slots;
        for (std::size_t a = 0; a < kAspectCount; ++a)
          for (std::size_t k = 0; k < dc.aspects[a].size(); ++k) slots.emplace_back(static_cast<Aspect>(a), k);
        if (slots.empty()) fail(ErrorCode::ParseError, "detailed caption has no elements");
        for (std::uint32_t v = 0; v < variants; ++v) {
          const auto role = fmt::format("variant#{}", v);
          std::mt19937_64 rng(ctx.seed_for(w.parent->id, role, w.attempt));
          const auto [aspect, index_in_aspect] = slots[rng() % slots.size()];
          const auto vr = variant_caption(ctx.agent(*variant_ep, w.parent->id, role, w.attempt), dc,
                                          aspect, index_in_aspect, cfg_.gen_max_retries);
          auto child = synthesize_variant(*gateway_, *generate_ep, vr.caption, w.parent->id,
                                          ctx.seed_for(w.parent->id, "generate#" + std::to_string(v), w.attempt));
          child.detailed_caption = vr.caption;
          w.children.push_back({std::move(child), {}});
        }
      }
      if (hooks_.retrieval) {
        const std::string text =
            w.updated.caption ? *w.updated.caption
            : w.updated.detailed_caption ? flatten_caption(*w.updated.detailed_caption)
                                         : w.parent->id;
        for (auto& c : retrieve(TextQuery{text}, *hooks_.retrieval, w.parent->id))
          w.children.push_back(std::move(c));
      }
    } catch (const Error& e) {
      if (fatal(e.code())) throw;
      w.error = {std::string(error_code_name(e.code())), e.what()};
    }
  });

  ManifestWriter writer(path(layout::kLedger), cfg_.fault, std::string(stage_name(Stage::Expand)));
  for (auto& w : work) {
    ++rep.processed;
    LedgerEntry e;
    std::vector<DataLine> data;
    if (w.error) {
      e = failed(w.error->first, w.error->second);
      ++rep.failed;
    } else {
      if (w.parent_changed) data.push_back({path(layout::kPool), to_json(w.updated)});
      std::size_t retained = 0;
      for (auto& c : w.children) {
        const auto& rec = c.record;
        if (!prefilter(rec.width, rec.height).accepted()) continue;
        if (!in_pool.count(rec.id)) {
          if (index.find_near(rec.phash)) continue;
          index.admit(rec.phash, rec.id);
          in_pool.insert(rec.id);
          if (!c.bytes.empty()) store_->put(c.bytes);
          data.push_back({path(layout::kPool), to_json(rec)});
        }
        ++retained;
      }
      e = succeeded(fmt::format("retained {} of {}", retained, w.children.size()));
      ++rep.succeeded;
    }
    e.stage = std::string(stage_name(Stage::Expand));
    e.record_id = w.parent->id;
    e.attempt = w.attempt;
    writer.commit(std::move(data), std::move(e));
  }
  writer.flush();
  write_file_atomic(path(layout::kDedupIndex), index.to_json().dump(2) + "\n");
  return rep;
}

// ---------------------------------------------------------------------------
// route

StageReport Pipeline::route(const StageOptions& opts) {
  StageContext ctx{cfg_, bank_, *gateway_};
  const auto ledger = Ledger::load(path(layout::kLedger));
  const auto pool = load_pool(cfg_.workdir);
  const auto& router_ep = cfg_.agent_endpoint("router");
  const EndpointConfig* caption_ep = ctx.optional_agent("caption");

  StageReport rep;
  std::vector<Pick> picks;
  std::unordered_map<std::string, const SourceRecord*> by_id;
  for (const auto& s : pool) {
    by_id.emplace(s.id, &s);
    if (const auto a = attempt_for(ledger, Stage::Route, s.id, opts.retry_failed))
      picks.push_back({s.id, *a});
    else
      ++rep.skipped;
  }

  ManifestWriter writer(path(layout::kLedger), cfg_.fault, std::string(stage_name(Stage::Route)));
  run_picks(
      Stage::Route, picks, ctx.width({&router_ep, caption_ep}), writer, rep,
      [&](const Pick& p) {
        SourceRecord s = *by_id.at(p.id);
        Outcome o;
        if (!s.caption && caption_ep) {
          try {
            s.caption = caption(ctx.agent(*caption_ep, s.id, agent_role::kCaption, p.attempt), s.id,
                                cfg_.gen_max_retries);
            o.data.push_back({path(layout::kPool), to_json(s)});
          } catch (const Error& e) {
            if (fatal(e.code())) throw;
            spdlog::warn("caption for {} unavailable: {}", s.id, e.what());
          }
        }
        const auto d = route_or_mark(ctx.agent(router_ep, s.id, agent_role::kRouter, p.attempt), s,
                                     cfg_.router_max_reparse);
        o.data.push_back({path(layout::kRouting), to_json(d)});
        for (const auto& stub : fan_out(d, cfg_.quota))
          o.data.push_back({path(layout::kTriplets), to_json(stub)});
        o.entry = d.failure ? failed("Unroutable", *d.failure)
                            : succeeded(fmt::format("applicable {}", d.applicable().size()));
        return o;
      },
      [&](const Pick&, std::string cls, std::string what) { return Outcome{{}, failed(cls, what)}; });
  writer.flush();
  return rep;
}

// ---------------------------------------------------------------------------
// synthesize

StageReport Pipeline::synthesize(const StageOptions& opts) {
  StageContext ctx{cfg_, bank_, *gateway_};
  const auto ledger = Ledger::load(path(layout::kLedger));
  const auto pool = load_pool(cfg_.workdir);
  const auto triplets = load_triplets(cfg_.workdir);
  std::unordered_map<std::string, const SourceRecord*> sources;
  for (const auto& s : pool) sources.emplace(s.id, &s);

  StageReport rep;
  std::vector<Pick> picks;
  std::unordered_map<std::string, const TripletRecord*> by_id;
  bool need_rewriter = false;
  for (const auto& t : triplets) {
    if (!stage_succeeded(ledger, Stage::Route, t.source_id)) continue;
    by_id.emplace(t.id, &t);
    if (const auto a = attempt_for(ledger, Stage::Synthesize, t.id, opts.retry_failed)) {
      picks.push_back({t.id, *a});
      cfg_.edit_endpoint(t.task);
      need_rewriter |= is_reasoning(t.task);
    } else {
      ++rep.skipped;
    }
  }
  if (picks.empty()) return rep;
  const auto& instr_ep = cfg_.agent_endpoint("instruction");
  const EndpointConfig* rewriter_ep = need_rewriter ? &cfg_.agent_endpoint("rewriter") : nullptr;
  const auto params = ctx.synthesis_params();

  ManifestWriter writer(path(layout::kLedger), cfg_.fault, std::string(stage_name(Stage::Synthesize)));
  const auto stub_of = [&](const Pick& p) {
    const auto& t = *by_id.at(p.id);
    TripletRecord stub;
    stub.id = t.id;
    stub.source_id = t.source_id;
    stub.task = t.task;
    stub.slot = t.slot;
    return stub;
  };
  run_picks(
      Stage::Synthesize, picks, ctx.width({&instr_ep, rewriter_ep}), writer, rep,
      [&](const Pick& p) {
        auto t = stub_of(p);
        const auto src_it = sources.find(t.source_id);
        if (src_it == sources.end()) fail(ErrorCode::PreconditionViolation, "source not in pool: " + t.source_id);
        const SourceRecord& src = *src_it->second;
        const auto& edit_ep = cfg_.edit_endpoint(t.task);
        const auto instr = ctx.agent(instr_ep, t.id, agent_role::kInstruction, p.attempt);
        Outcome o;
        EditJob job;
        if (is_text_aware(t.task)) {
          auto r = text_workflow(instr, t.task, src, hooks_.ocr->blocks(src), *store_, params, t.id,
                                 edit_ep.name);
          t = lifecycle_advance(std::move(t), event::Instructed{r.instruction, std::nullopt, r.target});
          job = std::move(r.job);
        } else if (is_reasoning(t.task)) {
          const auto rw = ctx.agent(*rewriter_ep, t.id, agent_role::kRewriter, p.attempt);
          auto r = reasoning_workflow(instr, rw, t.task, src, params);
          t = lifecycle_advance(std::move(t), event::Instructed{r.user_query, r.command, std::nullopt});
          job = {t.id, r.command, edit_ep.name, std::nullopt, std::nullopt};
        } else {
          auto ins = gen_instruction(instr, t.task, src, params);
          t = lifecycle_advance(std::move(t), event::Instructed{ins, std::nullopt, std::nullopt});
          job = {t.id, t.instruction, edit_ep.name, std::nullopt, std::nullopt};
        }
        t = dispatch_edit(*gateway_, edit_ep, job, std::move(t), ctx.seed_for(t.id, agent_role::kEdit, p.attempt));
        o.data.push_back({path(layout::kTriplets), to_json(t)});
        o.data.push_back({path(layout::kEdits), edit_audit(job, t)});
        o.entry = t.status == TripletStatus::Failed ? failed(class_of_note(*t.failure), *t.failure)
                                                    : succeeded();
        return o;
      },
      [&](const Pick& p, std::string cls, std::string what) {
        auto t = lifecycle_advance(stub_of(p), event::Failed{what});
        return Outcome{{{path(layout::kTriplets), to_json(t)}}, failed(cls, what)};
      });
  writer.flush();
  return rep;
}

// ---------------------------------------------------------------------------
// verify

StageReport Pipeline::verify(const StageOptions& opts) {
  StageContext ctx{cfg_, bank_, *gateway_};
  const auto ledger = Ledger::load(path(layout::kLedger));
  const auto triplets = load_triplets(cfg_.workdir);
  StageReport rep;
  std::vector<Pick> picks;
  std::unordered_map<std::string, const TripletRecord*> by_id;
  for (const auto& t : triplets) {
    if (!stage_succeeded(ledger, Stage::Synthesize, t.id)) continue;
    by_id.emplace(t.id, &t);
    if (const auto a = attempt_for(ledger, Stage::Verify, t.id, opts.retry_failed))
      picks.push_back({t.id, *a});
    else
      ++rep.skipped;
  }
  if (picks.empty()) return rep;
  const auto& judge_ep = cfg_.agent_endpoint("judge");
  JudgeParams jp{cfg_.judge_max_retries, cfg_.lenient_scores};

  // The record as it left synthesis.
  const auto edited_of = [&](const Pick& p) {
    auto t = *by_id.at(p.id);
    require(t.edited_blob.has_value(), "verify needs an edited blob for " + t.id);
    t.status = TripletStatus::Edited;
    t.scores.reset();
    t.failure.reset();
    return t;
  };

  ManifestWriter writer(path(layout::kLedger), cfg_.fault, std::string(stage_name(Stage::Verify)));
  run_picks(
      Stage::Verify, picks, ctx.width({&judge_ep}), writer, rep,
      [&](const Pick& p) {
        auto t = edited_of(p);
        t = judge_record(ctx.agent(judge_ep, t.id, "judge", p.attempt), std::move(t), jp);
        Outcome o;
        o.data.push_back({path(layout::kTriplets), to_json(t)});
        if (t.status == TripletStatus::Scored) {
          o.data.push_back({path(layout::kScores), Json{{"triplet_id", t.id},
                                                        {"f", t.scores->f()},
                                                        {"c", t.scores->c()},
                                                        {"q", t.scores->q()},
                                                        {"judge_endpoint", judge_ep.name},
                                                        {"prompt_bank_version", bank_.version()}}});
          o.entry = succeeded();
        } else {
          o.entry = failed(class_of_note(*t.failure), *t.failure);
        }
        return o;
      },
      [&](const Pick& p, std::string cls, std::string what) {
        auto t = lifecycle_advance(edited_of(p), event::Failed{what});
        return Outcome{{{path(layout::kTriplets), to_json(t)}}, failed(cls, what)};
      });
  writer.flush();
  return rep;
}

// ---------------------------------------------------------------------------
// filter

StageReport Pipeline::filter(const StageOptions& opts) {
  const auto ledger = Ledger::load(path(layout::kLedger));
  StageReport rep;
  {
    const auto triplets = load_triplets(cfg_.workdir);
    ManifestWriter writer(path(layout::kLedger), cfg_.fault, std::string(stage_name(Stage::Filter)));
    for (const auto& t : triplets) {
      if (!stage_succeeded(ledger, Stage::Verify, t.id)) continue;
      const auto a = attempt_for(ledger, Stage::Filter, t.id, opts.retry_failed);
      if (!a) {
        ++rep.skipped;
        continue;
      }
      auto s = t;
      require(s.scores.has_value(), "filter needs scores for " + s.id);
      s.status = TripletStatus::Scored;
      s = lifecycle_advance(std::move(s), event::Filter{});
      LedgerEntry e = succeeded(std::string(status_name(s.status)));
      e.stage = std::string(stage_name(Stage::Filter));
      e.record_id = s.id;
      e.attempt = *a;
      ++rep.processed;
      ++rep.succeeded;
      writer.commit({{path(layout::kTriplets), to_json(s)}}, std::move(e));
    }
  }
  std::string kept, dropped;
  for (const auto& t : load_triplets(cfg_.workdir)) {
    if (t.status == TripletStatus::Kept) kept += to_json(t).dump() + "\n";
    if (t.status == TripletStatus::Dropped) dropped += to_json(t).dump() + "\n";
  }
  write_file_atomic(path(layout::kKept), kept);
  write_file_atomic(path(layout::kDropped), dropped);
  return rep;
}

// ---------------------------------------------------------------------------
// stats

StageReport Pipeline::stats() {
  const auto doc = stats_document();
  write_file_atomic(path(layout::kStats), doc.dump(2) + "\n");
  StageReport rep;
  rep.processed = rep.succeeded = 1;
  return rep;
}

}  // namespace editforge

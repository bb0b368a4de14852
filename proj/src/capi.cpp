#include "editforge/editforge.h"

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "editforge/analytics.hpp"
#include "editforge/error.hpp"
#include "editforge/orchestrator.hpp"
#include "editforge/phash.hpp"
#include "editforge/verification.hpp"

using namespace editforge;

struct ef_pipeline {
  std::unique_ptr<Pipeline> impl;
};

struct ef_mock_server {
  std::unique_ptr<MockServer> impl;
};

namespace {

thread_local std::string g_last_error;

void init_logging() {
  static const bool done = [] {
    auto logger = spdlog::stderr_color_mt("editforge");
    spdlog::set_default_logger(logger);
    if (const char* lvl = std::getenv("EDITFORGE_LOG")) spdlog::set_level(spdlog::level::from_str(lvl));
    return true;
  }();
  (void)done;
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, mapping exceptions to status codes and the thread-local message.
template <typename F>
ef_status guarded(F&& fn) {
  init_logging();
  g_last_error.clear();
  try {
    fn();
    return EF_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<ef_status>(e.code());
  } catch (const Json::exception& e) {
    g_last_error = std::string("ConfigError: ") + e.what();
    return EF_CONFIG_ERROR;
  } catch (const std::exception& e) {
    g_last_error = std::string("Internal: ") + e.what();
    return EF_INTERNAL;
  }
}

void require_arg(const void* p, const char* name) {
  if (!p) fail(ErrorCode::PreconditionViolation, std::string(name) + " must not be NULL");
}

Json parse_json_arg(const char* text, const char* what) {
  if (!text || !*text) return Json::object();
  try {
    auto j = Json::parse(text);
    if (!j.is_object()) fail(ErrorCode::ConfigError, std::string(what) + " must be a JSON object");
    return j;
  } catch (const Json::exception& e) {
    fail(ErrorCode::ConfigError, std::string(what) + ": " + e.what());
  }
}

StageOptions stage_options(const char* args_json) {
  const auto j = parse_json_arg(args_json, "stage arguments");
  StageOptions o;
  for (const auto& [k, v] : j.items()) {
    if (k == "src") o.src = v.get<std::string>();
    else if (k == "variants") o.variants = v.get<std::uint32_t>();
    else if (k == "retry_failed") o.retry_failed = v.get<bool>();
    else fail(ErrorCode::ConfigError, "unknown stage argument \"" + k + "\"");
  }
  return o;
}

}  // namespace

extern "C" {

const char* ef_version(void) { return "0.1.0"; }

const char* ef_last_error(void) { return g_last_error.c_str(); }

const char* ef_status_name(ef_status status) {
  static thread_local std::string name;
  name = std::string(error_code_name(static_cast<ErrorCode>(status)));
  return name.c_str();
}

void ef_string_free(char* s) { std::free(s); }

ef_status ef_set_log_level(const char* level) {
  return guarded([&] {
    require_arg(level, "level");
    const auto lvl = spdlog::level::from_str(level);
    if (lvl == spdlog::level::off && std::string_view(level) != "off")
      fail(ErrorCode::ConfigError, "unknown log level \"" + std::string(level) + "\"");
    spdlog::set_level(lvl);
  });
}

ef_status ef_pipeline_open(const char* config_path, const char* overrides_json, ef_pipeline** out) {
  return guarded([&] {
    require_arg(out, "out");
    *out = nullptr;
    const auto overrides = parse_json_arg(overrides_json, "overrides");
    RunConfig cfg = config_path ? RunConfig::load(config_path, overrides)
                                : RunConfig::from_json(merge_overrides(Json::object(), overrides));
    auto p = std::make_unique<ef_pipeline>();
    p->impl = std::make_unique<Pipeline>(std::move(cfg));
    *out = p.release();
  });
}

void ef_pipeline_close(ef_pipeline* p) { delete p; }

ef_status ef_run_stage(ef_pipeline* p, const char* stage, const char* args_json, char** report_json) {
  return guarded([&] {
    require_arg(p, "pipeline");
    require_arg(stage, "stage");
    const auto s = stage_from_name(stage);
    if (!s) fail(ErrorCode::ConfigError, "unknown stage \"" + std::string(stage) + "\"");
    const auto report = p->impl->run_stage(*s, stage_options(args_json));
    if (report_json) *report_json = dup_string(report.to_json().dump());
  });
}

ef_status ef_run_all(ef_pipeline* p, const char* args_json, char** report_json) {
  return guarded([&] {
    require_arg(p, "pipeline");
    const auto report = p->impl->run_all(stage_options(args_json));
    if (report_json) *report_json = dup_string(report.to_json().dump());
  });
}

ef_status ef_stats(ef_pipeline* p, const char* format, char** out) {
  return guarded([&] {
    require_arg(p, "pipeline");
    require_arg(out, "out");
    const std::string fmt = format ? format : "json";
    if (fmt != "json" && fmt != "text") fail(ErrorCode::ConfigError, "unknown stats format \"" + fmt + "\"");
    const auto doc = p->impl->stats_document();
    *out = dup_string(fmt == "json" ? doc.dump(2) + "\n" : render_stats_text(doc));
  });
}

ef_status ef_dead_letters(ef_pipeline* p, char** out_json) {
  return guarded([&] {
    require_arg(p, "pipeline");
    require_arg(out_json, "out");
    *out_json = dup_string(p->impl->dead_letters().dump(2) + "\n");
  });
}

ef_status ef_consistency_files(const char* candidate_path, const char* reference_path,
                               char** report_json) {
  return guarded([&] {
    require_arg(candidate_path, "candidate");
    require_arg(reference_path, "reference");
    require_arg(report_json, "out");
    *report_json = dup_string(consistency_of_files(candidate_path, reference_path).to_json().dump());
  });
}

ef_status ef_mock_server_start(const char* script_path, const char* host, int port,
                               ef_mock_server** out) {
  return guarded([&] {
    require_arg(script_path, "script");
    require_arg(out, "out");
    *out = nullptr;
    auto s = std::make_unique<ef_mock_server>();
    s->impl = mock_serve(MockScript::load(script_path), host ? host : "127.0.0.1", port);
    *out = s.release();
  });
}

int ef_mock_server_port(const ef_mock_server* s) { return s ? s->impl->port() : 0; }

void ef_mock_server_wait(ef_mock_server* s) {
  if (s) s->impl->wait();
}

void ef_mock_server_stop(ef_mock_server* s) {
  if (s) s->impl->stop();
}

void ef_mock_server_free(ef_mock_server* s) { delete s; }

ef_status ef_phash_file(const char* image_path, uint64_t* out) {
  return guarded([&] {
    require_arg(image_path, "path");
    require_arg(out, "out");
    *out = phash_bytes(read_file(image_path));
  });
}

ef_status ef_prefilter(uint32_t width, uint32_t height, int* accepted, const char** reason) {
  return guarded([&] {
    require_arg(accepted, "accepted");
    const auto r = prefilter(width, height);
    *accepted = r.accepted() ? 1 : 0;
    if (reason) *reason = r.accepted() ? nullptr : reject_reason_name(*r.reject).data();
  });
}

}  // extern "C"

// editforge command-line front end over the C API.

#include <editforge/editforge.h>
#include <signal.h>

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <thread>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitConfig = 2;
constexpr int kExitStageFailures = 3;

struct Globals {
  std::string config;
  bool offline = false;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
  std::string log_level = "warn";
};

int report_error(ef_status st) {
  std::cerr << "editforge: " << ef_last_error() << "\n";
  return st == EF_CONFIG_ERROR ? kExitConfig : kExitError;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  ef_string_free(s);
  return out;
}

class PipelineHandle {
 public:
  ~PipelineHandle() { ef_pipeline_close(p_); }
  ef_status open(const Globals& g) {
    Json overrides = Json::object();
    if (g.offline) overrides["offline"] = true;
    if (g.seed) overrides["seed"] = *g.seed;
    if (g.workers) overrides["workers"] = *g.workers;
    const auto text = overrides.dump();
    return ef_pipeline_open(g.config.empty() ? nullptr : g.config.c_str(), text.c_str(), &p_);
  }
  ef_pipeline* get() const { return p_; }

 private:
  ef_pipeline* p_ = nullptr;
};

int run_stage(const Globals& g, const char* stage, const Json& args) {
  PipelineHandle p;
  if (auto st = p.open(g); st != EF_OK) return report_error(st);
  char* report = nullptr;
  const auto text = args.dump();
  if (auto st = ef_run_stage(p.get(), stage, text.c_str(), &report); st != EF_OK) return report_error(st);
  const auto j = Json::parse(take(report));
  std::cout << j.dump() << "\n";
  return j.at("failed").get<std::uint64_t>() > 0 ? kExitStageFailures : kExitOk;
}

int run_all(const Globals& g, bool retry_failed) {
  PipelineHandle p;
  if (auto st = p.open(g); st != EF_OK) return report_error(st);
  char* report = nullptr;
  const auto args = Json{{"retry_failed", retry_failed}}.dump();
  if (auto st = ef_run_all(p.get(), args.c_str(), &report); st != EF_OK) return report_error(st);
  auto j = Json::parse(take(report));
  bool failures = false;
  for (const auto& s : j.at("stages")) failures |= s.at("failed").get<std::uint64_t>() > 0;
  j.erase("stats");
  std::cout << j.dump() << "\n";
  return failures ? kExitStageFailures : kExitOk;
}

int stats(const Globals& g, const std::string& format) {
  PipelineHandle p;
  if (auto st = p.open(g); st != EF_OK) return report_error(st);
  char* report = nullptr;
  if (auto st = ef_run_stage(p.get(), "stats", nullptr, &report); st != EF_OK) return report_error(st);
  ef_string_free(report);
  char* out = nullptr;
  if (auto st = ef_stats(p.get(), format.c_str(), &out); st != EF_OK) return report_error(st);
  std::cout << take(out);
  return kExitOk;
}

int dead_letters(const Globals& g) {
  PipelineHandle p;
  if (auto st = p.open(g); st != EF_OK) return report_error(st);
  char* out = nullptr;
  if (auto st = ef_dead_letters(p.get(), &out); st != EF_OK) return report_error(st);
  std::cout << take(out);
  return kExitOk;
}

int consistency(const std::string& candidate, const std::string& reference) {
  char* out = nullptr;
  if (auto st = ef_consistency_files(candidate.c_str(), reference.c_str(), &out); st != EF_OK)
    return report_error(st);
  std::cout << Json::parse(take(out)).dump(2) << "\n";
  return kExitOk;
}

int mock_serve(const std::string& script, const std::string& host, int port) {
  // Signals are taken synchronously by a dedicated thread that stops the server.
  sigset_t set;
  sigemptyset(&set);
  sigaddset(&set, SIGINT);
  sigaddset(&set, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &set, nullptr);

  ef_mock_server* s = nullptr;
  if (auto st = ef_mock_server_start(script.c_str(), host.c_str(), port, &s); st != EF_OK)
    return report_error(st);
  std::cout << Json{{"host", host}, {"port", ef_mock_server_port(s)}}.dump() << std::endl;
  std::thread waiter([&] {
    int sig = 0;
    sigwait(&set, &sig);
    ef_mock_server_stop(s);
  });
  ef_mock_server_wait(s);
  // A stop from elsewhere leaves the waiter blocked; wake it.
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  ef_mock_server_free(s);
  return kExitOk;
}

int phash(const std::string& path) {
  std::uint64_t h = 0;
  if (auto st = ef_phash_file(path.c_str(), &h); st != EF_OK) return report_error(st);
  std::printf("%016llx\n", static_cast<unsigned long long>(h));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"editforge: builds instruction-image-edit triplets from a source image pool"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--config", g.config, "Run configuration (JSON)");
  app.add_flag("--offline", g.offline, "Only mock:// endpoints are allowed");
  app.add_option("--seed", g.seed, "Run seed");
  app.add_option("--workers", g.workers, "Worker pool width")->check(CLI::PositiveNumber);
  app.add_option("--log-level", g.log_level, "trace|debug|info|warn|error|off");

  bool retry_failed = false;
  const auto with_retry = [&](CLI::App* sub) {
    sub->add_flag("--retry-failed", retry_failed, "Rerun records whose last attempt failed");
    return sub;
  };

  std::string src;
  auto* ingest = with_retry(app.add_subcommand("ingest", "Add images from a directory to the pool"));
  ingest->add_option("--src", src, "Image directory")->required();

  std::uint32_t variants = 0;
  auto* expand = with_retry(app.add_subcommand("expand", "Grow the pool with caption variants and retrieval"));
  expand->add_option("--variants", variants, "Variants per seed image")->required();

  auto* route = with_retry(app.add_subcommand("route", "Decide which tasks apply to each source"));
  auto* synthesize = with_retry(app.add_subcommand("synthesize", "Write instructions and run edits"));
  auto* verify = with_retry(app.add_subcommand("verify", "Score edited triplets"));
  auto* filter = app.add_subcommand("filter", "Apply the keep rule");

  std::string format = "json";
  auto* stats_cmd = app.add_subcommand("stats", "Dataset statistics");
  stats_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::string candidate, reference;
  auto* cons = app.add_subcommand("consistency", "Agreement between two score files");
  cons->add_option("--candidate", candidate, "Candidate scores")->required();
  cons->add_option("--reference", reference, "Reference scores")->required();

  std::string script, host = "127.0.0.1";
  int port = 0;
  auto* serve = app.add_subcommand("mock-serve", "Serve a mock script over HTTP");
  serve->add_option("--script", script, "Mock script (JSON)")->required();
  serve->add_option("--port", port, "Port, 0 for any")->required();
  serve->add_option("--host", host, "Bind address");

  auto* run = with_retry(app.add_subcommand("run", "Run every stage in order"));
  run->add_option("--config", g.config, "Run configuration (JSON)");

  auto* dead = app.add_subcommand("dead-letters", "Failed records by stage and error class");

  std::string image;
  auto* ph = app.add_subcommand("phash", "Print the perceptual hash of an image");
  ph->add_option("image", image, "Image file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  if (ef_set_log_level(g.log_level.c_str()) != EF_OK) return report_error(EF_CONFIG_ERROR);

  const Json retry = Json{{"retry_failed", retry_failed}};
  if (*ingest) return run_stage(g, "ingest", Json{{"src", src}, {"retry_failed", retry_failed}});
  if (*expand) return run_stage(g, "expand", Json{{"variants", variants}, {"retry_failed", retry_failed}});
  if (*route) return run_stage(g, "route", retry);
  if (*synthesize) return run_stage(g, "synthesize", retry);
  if (*verify) return run_stage(g, "verify", retry);
  if (*filter) return run_stage(g, "filter", Json::object());
  if (*stats_cmd) return stats(g, format);
  if (*cons) return consistency(candidate, reference);
  if (*serve) return mock_serve(script, host, port);
  if (*run) return run_all(g, retry_failed);
  if (*dead) return dead_letters(g);
  if (*ph) return phash(image);
  return kExitError;
}

#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "editforge/blob_store.hpp"
#include "editforge/records.hpp"

namespace editforge {

enum class EndpointRole { Chat, ImageEdit, ImageGenerate };

std::string_view endpoint_role_name(EndpointRole r);
EndpointRole endpoint_role_from_name(std::string_view name);

struct EndpointConfig {
  std::string name;
  std::string base_url;  // "mock://" selects the in-process mock backend
  EndpointRole role = EndpointRole::Chat;
  double timeout = 60.0;       // seconds, per attempt
  int max_retries = 3;
  double backoff_base = 0.5;   // seconds; attempt k sleeps backoff_base * 2^k
  int max_in_flight = 4;
  std::string model;           // forwarded as "model" on chat requests
  std::string api_key;         // sent as a bearer token when set

  void validate() const;  // ConfigError on violated invariants
  bool is_mock() const;
};

EndpointConfig endpoint_from_json(const Json& j);
Json to_json(const EndpointConfig& e);

struct ChatParams {
  double temperature = 0.2;
  std::uint64_t seed = 0;
  int max_tokens = 1024;
};

// Agent roles as they travel in request metadata and mock-script matchers.
namespace agent_role {
inline constexpr std::string_view kRouter = "router";
inline constexpr std::string_view kCaption = "caption";
inline constexpr std::string_view kDetailedCaption = "detailed_caption";
inline constexpr std::string_view kVariantCaption = "variant_caption";
inline constexpr std::string_view kInstruction = "instruction";
inline constexpr std::string_view kRewriter = "rewriter";
inline constexpr std::string_view kJudgeF = "judge_f";
inline constexpr std::string_view kJudgeC = "judge_c";
inline constexpr std::string_view kJudgeQ = "judge_q";
inline constexpr std::string_view kEdit = "edit";
inline constexpr std::string_view kGenerate = "generate";
}  // namespace agent_role

struct ChatRequest {
  std::string system_prompt;
  std::string user_text;            // must be non-empty
  std::vector<std::string> images;  // blob ids, at most 2
  ChatParams params;
  std::string role;                 // agent role, for metadata only
  std::optional<TaskId> task;
};

// ---------------------------------------------------------------------------
// Transport

struct HttpRequest {
  std::string path;  // e.g. "/chat/completions"
  std::string body;
  std::map<std::string, std::string> headers;
};

struct HttpResponse {
  int status = 0;       // 0 when no HTTP response was received
  bool timed_out = false;
  std::string body;
  std::string error;    // transport error text when status == 0
};

class Transport {
 public:
  virtual ~Transport() = default;
  virtual HttpResponse post(const EndpointConfig& ep, const HttpRequest& req) = 0;
};

// cpp-httplib client; a fresh connection per request.
class HttpTransport final : public Transport {
 public:
  HttpResponse post(const EndpointConfig& ep, const HttpRequest& req) override;
};

// ---------------------------------------------------------------------------
// Mock backend

struct MockMatch {
  std::optional<std::string> role;
  std::optional<std::string> task;  // task key or display name
  std::optional<std::string> input_digest_prefix;
};

struct MockStep {
  int status = 200;
  std::string response;  // text for chat, base64 image for image roles
  int delay_ms = 0;
};

struct MockRule {
  MockMatch match;
  std::vector<MockStep> steps;  // consumed in order per rule; the last one repeats
};

struct MockScript {
  std::vector<MockRule> rules;
  std::optional<std::string> default_response;  // chat requests only
  std::uint32_t generate_width = 1024;
  std::uint32_t generate_height = 768;

  // Either a list of {match?, response | sequence, status?, delay_ms?} entries,
  // where an entry without "match" is the default, or an object
  // {rules: [...], default?, image_size?: [w, h]}.
  static MockScript from_json(const Json& j);
  static MockScript load(const fs::path& p);
};

// Serves the wire protocol from a script. Chat requests with no matching rule
// fall back to the default response, else 404. Image requests with no matching
// rule are answered by built-in deterministic transforms.
class MockBackend {
 public:
  explicit MockBackend(MockScript script);

  // Requests whose scripted delay reaches timeout_s come back as timed out.
  HttpResponse handle(const HttpRequest& req,
                      double timeout_s = std::numeric_limits<double>::infinity());
  std::size_t request_count() const { return requests_.load(); }

 private:
  const MockRule* match(const HttpRequest& req) const;
  HttpResponse chat_reply(const std::string& text) const;

  MockScript script_;
  std::mutex mu_;
  std::vector<std::size_t> cursor_;  // per-rule step index
  std::atomic<std::size_t> requests_{0};
};

// Deterministic mock image transforms, exposed for tests.
Bytes mock_edit_png(std::span<const std::uint8_t> source, std::string_view command,
                    const Bytes* mask, const Bytes* glyph);
Bytes mock_generate_png(std::string_view prompt, std::uint64_t seed, std::uint32_t width,
                        std::uint32_t height);

// HTTP server wrapping a MockBackend.
class MockServer {
 public:
  // BindError when the address cannot be bound. port 0 picks a free port.
  MockServer(MockScript script, const std::string& host, int port);
  ~MockServer();
  MockServer(const MockServer&) = delete;
  MockServer& operator=(const MockServer&) = delete;

  int port() const { return port_; }
  void wait();  // blocks until stop()
  void stop();
  MockBackend& backend() { return *backend_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::shared_ptr<MockBackend> backend_;
  int port_ = 0;
};

std::unique_ptr<MockServer> mock_serve(MockScript script, const std::string& host, int port);

// ---------------------------------------------------------------------------
// Client

struct EditExtras {
  std::optional<std::string> mask_blob;
  std::optional<std::string> glyph_blob;
};

class ModelGateway {
 public:
  using Sleeper = std::function<void(std::chrono::duration<double>)>;

  struct Options {
    bool offline = false;
    std::shared_ptr<MockBackend> mock;         // answers mock:// endpoints
    std::shared_ptr<Transport> http;           // defaults to HttpTransport
    Sleeper sleep;                             // defaults to this_thread::sleep_for
  };

  ModelGateway(BlobStore& store, Options opts);
  ~ModelGateway();

  std::string chat(const EndpointConfig& ep, const ChatRequest& req);
  // Returns the blob id of the edited image.
  std::string edit_image(const EndpointConfig& ep, std::string_view source_blob,
                         std::string_view command, const EditExtras& extras = {},
                         std::uint64_t seed = 0, std::optional<TaskId> task = std::nullopt);
  // Returns the blob id of the generated image.
  std::string generate_image(const EndpointConfig& ep, std::string_view prompt, std::uint64_t seed);

  BlobStore& store() { return store_; }

 private:
  class Gate;

  HttpResponse send(const EndpointConfig& ep, const HttpRequest& req);
  Gate& gate_for(const EndpointConfig& ep);
  std::string image_result(const HttpResponse& resp);

  BlobStore& store_;
  Options opts_;
  std::mutex gates_mu_;
  std::map<std::string, std::unique_ptr<Gate>> gates_;
};

}  // namespace editforge

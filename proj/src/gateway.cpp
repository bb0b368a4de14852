#include "editforge/gateway.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "editforge/digest.hpp"
#include "editforge/error.hpp"
#include "editforge/image.hpp"

namespace editforge {

namespace {

constexpr std::string_view kHeaderRole = "X-EditForge-Role";
constexpr std::string_view kHeaderTask = "X-EditForge-Task";
constexpr std::string_view kHeaderDigest = "X-EditForge-Input-Digest";

constexpr std::array<std::string_view, 11> kKnownRoles = {
    agent_role::kRouter,      agent_role::kCaption,  agent_role::kDetailedCaption,
    agent_role::kVariantCaption, agent_role::kInstruction, agent_role::kRewriter,
    agent_role::kJudgeF,      agent_role::kJudgeC,   agent_role::kJudgeQ,
    agent_role::kEdit,        agent_role::kGenerate};

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::string header(const HttpRequest& req, std::string_view name) {
  for (const auto& [k, v] : req.headers) {
    if (k.size() != name.size()) continue;
    bool eq = true;
    for (std::size_t i = 0; i < k.size() && eq; ++i)
      eq = std::tolower(static_cast<unsigned char>(k[i])) ==
           std::tolower(static_cast<unsigned char>(name[i]));
    if (eq) return v;
  }
  return {};
}

std::string data_url(std::span<const std::uint8_t> bytes) {
  const auto fmt = sniff_format(bytes);
  const char* mime = fmt == ImageFormat::Jpeg ? "image/jpeg" : "image/png";
  return std::string("data:") + mime + ";base64," + base64_encode(bytes);
}

// Deterministic byte stream for mock images. mt19937_64 output is fully
// specified by the standard, unlike the std distributions.
class KeyedRng {
 public:
  explicit KeyedRng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(eng_() % n); }
  std::uint8_t byte() { return static_cast<std::uint8_t>(eng_() >> 56); }

 private:
  std::mt19937_64 eng_;
};

MockStep step_from_json(const Json& j) {
  MockStep s;
  s.status = j.value("status", 200);
  if (const auto it = j.find("response"); it != j.end()) s.response = it->get<std::string>();
  s.delay_ms = j.value("delay_ms", 0);
  return s;
}

MockRule rule_from_json(const Json& j) {
  MockRule r;
  if (const auto it = j.find("match"); it != j.end()) {
    const auto& m = *it;
    if (!m.is_object()) fail(ErrorCode::ConfigError, "mock rule match must be an object");
    if (m.contains("role")) {
      auto role = m.at("role").get<std::string>();
      if (std::find(kKnownRoles.begin(), kKnownRoles.end(), role) == kKnownRoles.end())
        fail(ErrorCode::ConfigError, "mock rule has unknown role: " + role);
      r.match.role = role;
    }
    if (m.contains("task")) {
      const auto name = m.at("task").get<std::string>();
      const auto id = task_from_name(name);
      if (!id) fail(ErrorCode::ConfigError, "mock rule has unknown task: " + name);
      r.match.task = std::string(task_kind(*id).key);
    }
    if (m.contains("input_digest_prefix"))
      r.match.input_digest_prefix = m.at("input_digest_prefix").get<std::string>();
  }
  if (const auto it = j.find("sequence"); it != j.end()) {
    for (const auto& s : *it) r.steps.push_back(step_from_json(s));
    if (r.steps.empty()) fail(ErrorCode::ConfigError, "mock rule sequence is empty");
  } else {
    r.steps.push_back(step_from_json(j));
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// EndpointConfig

std::string_view endpoint_role_name(EndpointRole r) {
  switch (r) {
    case EndpointRole::Chat: return "chat";
    case EndpointRole::ImageEdit: return "image-edit";
    case EndpointRole::ImageGenerate: return "image-generate";
  }
  return "?";
}

EndpointRole endpoint_role_from_name(std::string_view name) {
  if (name == "chat") return EndpointRole::Chat;
  if (name == "image-edit") return EndpointRole::ImageEdit;
  if (name == "image-generate") return EndpointRole::ImageGenerate;
  fail(ErrorCode::ConfigError, "unknown endpoint role: " + std::string(name));
}

void EndpointConfig::validate() const {
  if (name.empty()) fail(ErrorCode::ConfigError, "endpoint without a name");
  if (base_url.empty()) fail(ErrorCode::ConfigError, "endpoint " + name + " has no base_url");
  if (!(timeout > 0)) fail(ErrorCode::ConfigError, "endpoint " + name + ": timeout must be > 0");
  if (max_retries < 0) fail(ErrorCode::ConfigError, "endpoint " + name + ": max_retries must be >= 0");
  if (max_in_flight < 1)
    fail(ErrorCode::ConfigError, "endpoint " + name + ": max_in_flight must be >= 1");
  if (backoff_base < 0) fail(ErrorCode::ConfigError, "endpoint " + name + ": backoff_base must be >= 0");
}

bool EndpointConfig::is_mock() const { return base_url.rfind("mock://", 0) == 0; }

EndpointConfig endpoint_from_json(const Json& j) {
  EndpointConfig e;
  e.name = j.at("name").get<std::string>();
  e.base_url = j.at("base_url").get<std::string>();
  e.role = endpoint_role_from_name(j.at("role").get<std::string>());
  e.timeout = j.value("timeout", e.timeout);
  e.max_retries = j.value("max_retries", e.max_retries);
  e.backoff_base = j.value("backoff_base", e.backoff_base);
  e.max_in_flight = j.value("max_in_flight", e.max_in_flight);
  e.model = j.value("model", std::string());
  e.api_key = j.value("api_key", std::string());
  e.validate();
  return e;
}

Json to_json(const EndpointConfig& e) {
  Json j;
  j["name"] = e.name;
  j["base_url"] = e.base_url;
  j["role"] = endpoint_role_name(e.role);
  j["timeout"] = e.timeout;
  j["max_retries"] = e.max_retries;
  j["backoff_base"] = e.backoff_base;
  j["max_in_flight"] = e.max_in_flight;
  if (!e.model.empty()) j["model"] = e.model;
  return j;
}

// ---------------------------------------------------------------------------
// MockScript

MockScript MockScript::from_json(const Json& j) {
  MockScript s;
  const Json* entries = &j;
  if (j.is_object()) {
    entries = &j.at("rules");
    if (const auto it = j.find("default"); it != j.end() && !it->is_null())
      s.default_response = it->get<std::string>();
    if (const auto it = j.find("image_size"); it != j.end()) {
      s.generate_width = it->at(0).get<std::uint32_t>();
      s.generate_height = it->at(1).get<std::uint32_t>();
      if (s.generate_width == 0 || s.generate_height == 0)
        fail(ErrorCode::ConfigError, "mock image_size must be positive");
    }
  }
  if (!entries->is_array()) fail(ErrorCode::ConfigError, "mock script must be a list of rules");
  for (const auto& e : *entries) {
    if (!e.is_object()) fail(ErrorCode::ConfigError, "mock script entry must be an object");
    if (!e.contains("match") && !e.contains("sequence") && !e.contains("status")) {
      if (s.default_response) fail(ErrorCode::ConfigError, "mock script has two defaults");
      s.default_response = e.at("response").get<std::string>();
      continue;
    }
    s.rules.push_back(rule_from_json(e));
  }
  return s;
}

MockScript MockScript::load(const fs::path& p) {
  try {
    return from_json(Json::parse(read_text(p)));
  } catch (const Json::exception& e) {
    fail(ErrorCode::ConfigError, "mock script " + p.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Mock images

Bytes mock_edit_png(std::span<const std::uint8_t> source, std::string_view command,
                    const Bytes* mask, const Bytes* glyph) {
  Image img = decode_image(source);
  const auto key = digest_of({sha256_hex(source), command});
  KeyedRng rng(stable_hash64(key));
  std::array<std::uint8_t, 3> shift{};
  for (auto& s : shift) s = static_cast<std::uint8_t>(rng.byte() | 1);
  for (std::size_t i = 0; i < img.pixels.size(); ++i)
    img.pixels[i] = static_cast<std::uint8_t>(img.pixels[i] + shift[i % 3]);

  if (mask && glyph) {
    const Image m = decode_image(*mask);
    const Image g = decode_image(*glyph);
    if (m.width == img.width && m.height == img.height && g.width == img.width &&
        g.height == img.height) {
      const Image src = decode_image(source);
      for (std::uint32_t y = 0; y < img.height; ++y)
        for (std::uint32_t x = 0; x < img.width; ++x) {
          if (m.at(x, y)[0] < 128) {
            std::copy_n(src.at(x, y), 3, img.at(x, y));  // outside the mask: untouched
          } else if (g.at(x, y)[0] >= 128) {
            std::fill_n(img.at(x, y), 3, std::uint8_t{0});
          }
        }
    }
  }
  return encode_png(img);
}

Bytes mock_generate_png(std::string_view prompt, std::uint64_t seed, std::uint32_t width,
                        std::uint32_t height) {
  require(width > 0 && height > 0, "generated image must be non-empty");
  KeyedRng rng(stable_hash64(digest_of({prompt, std::to_string(seed)})));
  Image img(width, height, 3);
  std::array<std::uint8_t, 3> c0{}, c1{};
  for (auto& c : c0) c = rng.byte();
  for (auto& c : c1) c = rng.byte();
  const double angle = static_cast<double>(rng.below(360)) * 3.141592653589793 / 180.0;
  const double dx = std::cos(angle), dy = std::sin(angle);
  const double span = std::abs(dx) * width + std::abs(dy) * height;
  for (std::uint32_t y = 0; y < height; ++y)
    for (std::uint32_t x = 0; x < width; ++x) {
      double t = (dx * x + dy * y) / span;
      t = t - std::floor(t);
      auto* p = img.at(x, y);
      for (int ch = 0; ch < 3; ++ch)
        p[ch] = static_cast<std::uint8_t>(std::lround(c0[ch] + (c1[ch] - c0[ch]) * t));
    }
  // Rectangles and discs give the hash low-frequency structure to work with.
  for (int k = 0; k < 10; ++k) {
    const std::uint32_t cx = rng.below(width), cy = rng.below(height);
    const std::uint32_t rw = 1 + rng.below(std::max(1u, width / 3));
    const std::uint32_t rh = 1 + rng.below(std::max(1u, height / 3));
    const bool disc = (rng.next() & 1) != 0;
    std::array<std::uint8_t, 3> col{rng.byte(), rng.byte(), rng.byte()};
    const std::uint32_t x0 = cx > rw ? cx - rw : 0, x1 = std::min(width, cx + rw);
    const std::uint32_t y0 = cy > rh ? cy - rh : 0, y1 = std::min(height, cy + rh);
    for (std::uint32_t y = y0; y < y1; ++y)
      for (std::uint32_t x = x0; x < x1; ++x) {
        if (disc) {
          const double nx = (static_cast<double>(x) - cx) / rw;
          const double ny = (static_cast<double>(y) - cy) / rh;
          if (nx * nx + ny * ny > 1.0) continue;
        }
        std::copy(col.begin(), col.end(), img.at(x, y));
      }
  }
  return encode_png(img);
}

// ---------------------------------------------------------------------------
// MockBackend

MockBackend::MockBackend(MockScript script)
    : script_(std::move(script)), cursor_(script_.rules.size(), 0) {}

const MockRule* MockBackend::match(const HttpRequest& req) const {
  const auto role = header(req, kHeaderRole);
  const auto task = header(req, kHeaderTask);
  const auto digest = header(req, kHeaderDigest);
  for (const auto& r : script_.rules) {
    if (r.match.role && *r.match.role != role) continue;
    if (r.match.task && *r.match.task != task) continue;
    if (r.match.input_digest_prefix && digest.rfind(*r.match.input_digest_prefix, 0) != 0) continue;
    return &r;
  }
  return nullptr;
}

HttpResponse MockBackend::chat_reply(const std::string& text) const {
  Json body;
  body["id"] = "mock-" + sha256_hex(text).substr(0, 16);
  body["object"] = "chat.completion";
  body["model"] = "mock";
  body["choices"] = Json::array(
      {Json{{"index", 0},
            {"message", Json{{"role", "assistant"}, {"content", text}}},
            {"finish_reason", "stop"}}});
  return {200, false, body.dump(), {}};
}

HttpResponse MockBackend::handle(const HttpRequest& req, double timeout_s) {
  ++requests_;
  const MockRule* rule = match(req);
  std::optional<MockStep> step;
  if (rule) {
    std::lock_guard lock(mu_);
    const auto idx = static_cast<std::size_t>(rule - script_.rules.data());
    step = rule->steps[std::min(cursor_[idx], rule->steps.size() - 1)];
    ++cursor_[idx];
  }
  if (step && step->delay_ms > 0) {
    const double delay = step->delay_ms / 1000.0;
    if (delay >= timeout_s) {
      std::this_thread::sleep_for(std::chrono::duration<double>(timeout_s));
      return {0, true, {}, "timeout"};
    }
    std::this_thread::sleep_for(std::chrono::duration<double>(delay));
  }
  if (step && step->status != 200) {
    Json err{{"error", Json{{"message", "scripted failure"}, {"code", step->status}}}};
    return {step->status, false, err.dump(), {}};
  }

  Json body;
  try {
    body = Json::parse(req.body);
  } catch (const Json::exception&) {
    return {400, false, R"({"error":{"message":"invalid JSON"}})", {}};
  }

  if (ends_with(req.path, "/chat/completions")) {
    if (step) return chat_reply(step->response);
    if (script_.default_response) return chat_reply(*script_.default_response);
    return {404, false, R"({"error":{"message":"no mock rule matched"}})", {}};
  }

  const bool edit = ends_with(req.path, "/images/edits");
  const bool generate = ends_with(req.path, "/images/generations");
  if (!edit && !generate) return {404, false, R"({"error":{"message":"unknown path"}})", {}};
  if (step) return {200, false, Json{{"image", step->response}}.dump(), {}};
  try {
    Bytes png;
    if (edit) {
      const auto source = base64_decode(body.at("image").get<std::string>());
      std::optional<Bytes> mask, glyph;
      if (body.contains("mask")) mask = base64_decode(body.at("mask").get<std::string>());
      if (body.contains("glyph")) glyph = base64_decode(body.at("glyph").get<std::string>());
      png = mock_edit_png(source, body.at("prompt").get<std::string>(), mask ? &*mask : nullptr,
                          glyph ? &*glyph : nullptr);
    } else {
      png = mock_generate_png(body.at("prompt").get<std::string>(),
                              body.value("seed", std::uint64_t{0}), script_.generate_width,
                              script_.generate_height);
    }
    return {200, false, Json{{"image", base64_encode(png)}}.dump(), {}};
  } catch (const std::exception& e) {
    return {400, false, Json{{"error", Json{{"message", e.what()}}}}.dump(), {}};
  }
}

// ---------------------------------------------------------------------------
// ModelGateway

class ModelGateway::Gate {
 public:
  explicit Gate(int cap) : cap_(cap) {}
  void acquire() {
    std::unique_lock lock(mu_);
    cv_.wait(lock, [&] { return in_flight_ < cap_; });
    ++in_flight_;
  }
  void release() {
    {
      std::lock_guard lock(mu_);
      --in_flight_;
    }
    cv_.notify_one();
  }

 private:
  std::mutex mu_;
  std::condition_variable cv_;
  int cap_;
  int in_flight_ = 0;
};

ModelGateway::ModelGateway(BlobStore& store, Options opts) : store_(store), opts_(std::move(opts)) {
  if (!opts_.http) opts_.http = std::make_shared<HttpTransport>();
  if (!opts_.sleep)
    opts_.sleep = [](std::chrono::duration<double> d) { std::this_thread::sleep_for(d); };
}

ModelGateway::~ModelGateway() = default;

ModelGateway::Gate& ModelGateway::gate_for(const EndpointConfig& ep) {
  std::lock_guard lock(gates_mu_);
  auto& g = gates_[ep.name];
  if (!g) g = std::make_unique<Gate>(ep.max_in_flight);
  return *g;
}

HttpResponse ModelGateway::send(const EndpointConfig& ep, const HttpRequest& req) {
  if (ep.is_mock() && !opts_.mock)
    fail(ErrorCode::ConfigError, "endpoint " + ep.name + " is mock:// but no mock script is loaded");
  if (!ep.is_mock() && opts_.offline)
    fail(ErrorCode::ConfigError, "offline mode forbids non-mock endpoint " + ep.name);

  Gate& gate = gate_for(ep);
  int timeouts = 0;
  std::string last_error;
  for (int attempt = 0; attempt <= ep.max_retries; ++attempt) {
    HttpResponse resp;
    gate.acquire();
    try {
      resp = ep.is_mock() ? opts_.mock->handle(req, ep.timeout) : opts_.http->post(ep, req);
    } catch (...) {
      gate.release();
      throw;
    }
    gate.release();

    if (resp.status >= 200 && resp.status < 300) return resp;
    if (resp.status >= 400 && resp.status < 500 && resp.status != 429)
      fail(ErrorCode::BadRequest, ep.name + ": HTTP " + std::to_string(resp.status));
    if (resp.status == 0) {
      if (resp.timed_out) ++timeouts;
      last_error = resp.timed_out ? "timeout" : "transport: " + resp.error;
    } else {
      last_error = "HTTP " + std::to_string(resp.status);
    }
    spdlog::debug("{} attempt {} failed: {}", ep.name, attempt + 1, last_error);
    if (attempt < ep.max_retries)
      opts_.sleep(std::chrono::duration<double>(ep.backoff_base * std::ldexp(1.0, attempt)));
  }
  if (timeouts == ep.max_retries + 1) fail(ErrorCode::Timeout, ep.name);
  fail(ErrorCode::Exhausted, ep.name + ": " + last_error);
}

std::string ModelGateway::chat(const EndpointConfig& ep, const ChatRequest& req) {
  require(ep.role == EndpointRole::Chat, "chat requires an endpoint with role chat");
  require(!req.user_text.empty(), "chat request needs non-empty user_text");
  require(req.images.size() <= 2, "chat request carries at most two images");

  Json content = Json::array();
  content.push_back(Json{{"type", "text"}, {"text", req.user_text}});
  for (const auto& id : req.images) {
    const auto bytes = store_.get(id);
    content.push_back(Json{{"type", "image_url"}, {"image_url", Json{{"url", data_url(bytes)}}}});
  }
  Json messages = Json::array();
  if (!req.system_prompt.empty())
    messages.push_back(Json{{"role", "system"}, {"content", req.system_prompt}});
  messages.push_back(Json{{"role", "user"}, {"content", content}});

  Json body;
  body["model"] = ep.model.empty() ? ep.name : ep.model;
  body["messages"] = messages;
  body["temperature"] = req.params.temperature;
  body["seed"] = req.params.seed;
  body["max_tokens"] = req.params.max_tokens;
  body["n"] = 1;

  HttpRequest http;
  http.path = "/chat/completions";
  http.body = body.dump();
  http.headers[std::string(kHeaderRole)] = req.role;
  if (req.task) http.headers[std::string(kHeaderTask)] = std::string(task_kind(*req.task).key);
  http.headers[std::string(kHeaderDigest)] =
      req.images.empty() ? sha256_hex(req.user_text) : req.images.front();
  if (!ep.api_key.empty()) http.headers["Authorization"] = "Bearer " + ep.api_key;

  const auto resp = send(ep, http);
  try {
    const auto j = Json::parse(resp.body);
    const auto& msg = j.at("choices").at(0).at("message").at("content");
    if (msg.is_string()) return msg.get<std::string>();
    std::string text;
    for (const auto& part : msg)
      if (part.value("type", "") == "text") text += part.at("text").get<std::string>();
    return text;
  } catch (const Json::exception& e) {
    fail(ErrorCode::DecodeError, ep.name + ": malformed chat response: " + e.what());
  }
}

std::string ModelGateway::image_result(const HttpResponse& resp) {
  Bytes bytes;
  try {
    bytes = base64_decode(Json::parse(resp.body).at("image").get<std::string>());
  } catch (const Json::exception& e) {
    fail(ErrorCode::DecodeError, std::string("malformed image response: ") + e.what());
  }
  probe_image(bytes);  // DecodeError when the payload is not an image
  return store_.put(bytes);
}

std::string ModelGateway::edit_image(const EndpointConfig& ep, std::string_view source_blob,
                                     std::string_view command, const EditExtras& extras,
                                     std::uint64_t seed, std::optional<TaskId> task) {
  require(ep.role == EndpointRole::ImageEdit, "edit_image requires an endpoint with role image-edit");
  require(store_.contains(source_blob), "edit source blob must exist");
  const auto source = store_.get(source_blob);
  Json body;
  body["image"] = base64_encode(source);
  body["prompt"] = std::string(command);
  body["seed"] = seed;
  if (extras.mask_blob) body["mask"] = base64_encode(store_.get(*extras.mask_blob));
  if (extras.glyph_blob) body["glyph"] = base64_encode(store_.get(*extras.glyph_blob));

  HttpRequest http;
  http.path = "/images/edits";
  http.body = body.dump();
  http.headers[std::string(kHeaderRole)] = std::string(agent_role::kEdit);
  if (task) http.headers[std::string(kHeaderTask)] = std::string(task_kind(*task).key);
  http.headers[std::string(kHeaderDigest)] = std::string(source_blob);
  if (!ep.api_key.empty()) http.headers["Authorization"] = "Bearer " + ep.api_key;
  return image_result(send(ep, http));
}

std::string ModelGateway::generate_image(const EndpointConfig& ep, std::string_view prompt,
                                         std::uint64_t seed) {
  require(ep.role == EndpointRole::ImageGenerate,
          "generate_image requires an endpoint with role image-generate");
  Json body;
  body["prompt"] = std::string(prompt);
  body["seed"] = seed;
  HttpRequest http;
  http.path = "/images/generations";
  http.body = body.dump();
  http.headers[std::string(kHeaderRole)] = std::string(agent_role::kGenerate);
  http.headers[std::string(kHeaderDigest)] = sha256_hex(prompt);
  if (!ep.api_key.empty()) http.headers["Authorization"] = "Bearer " + ep.api_key;
  return image_result(send(ep, http));
}

}  // namespace editforge

#include "support/fixtures.hpp"

#include <atomic>
#include <fstream>
#include <stdexcept>

#include "editforge/blob_store.hpp"
#include "editforge/digest.hpp"
#include "editforge/parsers.hpp"

namespace editforge::testing {

TempDir::TempDir(const std::string& tag) {
  static std::atomic<int> counter{0};
  std::random_device rd;
  path_ = fs::temp_directory_path() /
          ("editforge-" + tag + "-" + std::to_string(rd()) + "-" + std::to_string(counter++));
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

Image pattern_image(std::uint32_t w, std::uint32_t h, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + 17);
  const auto byte = [&] { return static_cast<std::uint8_t>(rng() >> 56); };
  Image img(w, h, 3);
  const std::uint8_t a[3] = {byte(), byte(), byte()};
  const std::uint8_t b[3] = {byte(), byte(), byte()};
  for (std::uint32_t y = 0; y < h; ++y)
    for (std::uint32_t x = 0; x < w; ++x) {
      const double t = (static_cast<double>(x) / w + static_cast<double>(y) / h) / 2;
      for (int c = 0; c < 3; ++c)
        img.at(x, y)[c] = static_cast<std::uint8_t>(a[c] + t * (b[c] - a[c]));
    }
  const int shapes = 12;
  for (int s = 0; s < shapes; ++s) {
    const std::uint32_t x0 = static_cast<std::uint32_t>(rng() % w), y0 = static_cast<std::uint32_t>(rng() % h);
    const std::uint32_t sw = w / 8 + static_cast<std::uint32_t>(rng() % (w / 3)),
                        sh = h / 8 + static_cast<std::uint32_t>(rng() % (h / 3));
    const std::uint8_t col[3] = {byte(), byte(), byte()};
    const bool disc = rng() & 1;
    for (std::uint32_t y = y0; y < std::min(h, y0 + sh); ++y)
      for (std::uint32_t x = x0; x < std::min(w, x0 + sw); ++x) {
        if (disc) {
          const double dx = (x - x0 + 0.5) / sw - 0.5, dy = (y - y0 + 0.5) / sh - 0.5;
          if (dx * dx + dy * dy > 0.25) continue;
        }
        std::copy_n(col, 3, img.at(x, y));
      }
  }
  return img;
}

Image perturb(const Image& img, std::uint64_t seed, int amplitude, int shift) {
  std::mt19937_64 rng(seed);
  Image out = img;
  for (auto& p : out.pixels) {
    const int noise = amplitude == 0 ? 0 : static_cast<int>(rng() % (2 * amplitude + 1)) - amplitude;
    p = static_cast<std::uint8_t>(std::clamp(p + noise + shift, 0, 255));
  }
  return out;
}

void write_png(const fs::path& p, const Image& img) {
  const auto bytes = encode_png(img);
  std::ofstream f(p, std::ios::binary);
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw std::runtime_error("cannot write " + p.string());
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  f << text;
  if (!f) throw std::runtime_error("cannot write " + p.string());
}

OcrBlock rect_block(const std::string& text, double conf, double x0, double y0, double x1, double y1) {
  return OcrBlock{text, conf, {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
}

Json ocr_json(const std::vector<OcrBlock>& blocks) {
  Json arr = Json::array();
  for (const auto& b : blocks) arr.push_back(to_json(b));
  return arr;
}

std::vector<fs::path> write_fixture_corpus(const fs::path& dir, std::size_t n, std::uint64_t seed) {
  fs::create_directories(dir);
  std::vector<fs::path> out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t w = 720 + static_cast<std::uint32_t>((i * 37) % 161);
    const std::uint32_t h = 540 + static_cast<std::uint32_t>((i * 53) % 61);
    char name[32];
    std::snprintf(name, sizeof name, "img_%03zu", i);
    const auto png = dir / (std::string(name) + ".png");
    write_png(png, pattern_image(w, h, seed * 1000 + i));
    write_text(dir / (std::string(name) + ".ocr.json"),
               ocr_json({rect_block("OPEN", 0.95, 40, 40, 240, 100)}).dump());
    out.push_back(png);
  }
  return out;
}

std::string router_reply(const std::vector<TaskId>& applicable) {
  VerdictVector v;
  for (const auto& k : taxonomy()) {
    const bool yes = applicable.empty() ||
                     std::find(applicable.begin(), applicable.end(), k.id) != applicable.end();
    v[task_index(k.id)] = {yes, yes ? "the image supports this edit" : "nothing suitable"};
  }
  return render_router_verdicts(v);
}

std::string detailed_caption_reply() {
  DetailedCaption dc;
  dc.at(Aspect::Foreground) = {"A wooden bench.", "A red bicycle."};
  dc.at(Aspect::Midground) = {"A shop front with a sign."};
  dc.at(Aspect::Background) = {"Brick houses under a pale sky."};
  dc.at(Aspect::Style) = {"Photorealistic."};
  dc.at(Aspect::LightingAndAtmosphere) = {"Soft morning light."};
  dc.at(Aspect::CompositionAndRelationships) = {"The bench sits left of the shop door."};
  dc.at(Aspect::VisualFocusAndPerspective) = {"Eye-level view centred on the door."};
  return render_detailed_caption(dc);
}

Json pipeline_mock_script(const MockPlan& plan) {
  Json rules = Json::array();
  const auto rule = [&](Json match, const std::string& response) {
    rules.push_back(Json{{"match", std::move(match)}, {"response", response}});
  };
  for (const auto& id : plan.unroutable_sources)
    rule(Json{{"role", "router"}, {"input_digest_prefix", id}}, "this reply is not a verdict list");
  rule(Json{{"role", "router"}}, router_reply(plan.applicable));
  rule(Json{{"role", "caption"}}, kCaption);
  rule(Json{{"role", "detailed_caption"}}, detailed_caption_reply());
  rule(Json{{"role", "variant_caption"}}, "A blue umbrella leaning on the bench.");
  for (const auto& k : taxonomy()) {
    if (is_text_aware(k.id))
      rule(Json{{"role", "instruction"}, {"task", k.key}}, kTextInstruction);
    else if (is_reasoning(k.id))
      rule(Json{{"role", "instruction"}, {"task", k.key}}, kReasoningQuery);
  }
  rule(Json{{"role", "instruction"}}, kGenericInstruction);
  rule(Json{{"role", "rewriter"}}, kRewrittenCommand);
  for (const auto& [task, s] : plan.scores) {
    rule(Json{{"role", "judge_f"}, {"task", task_kind(task).key}}, std::to_string(s[0]));
    rule(Json{{"role", "judge_c"}, {"task", task_kind(task).key}}, std::to_string(s[1]));
    rule(Json{{"role", "judge_q"}, {"task", task_kind(task).key}}, std::to_string(s[2]));
  }
  rule(Json{{"role", "judge_f"}}, "3");
  rule(Json{{"role", "judge_c"}}, "3");
  rule(Json{{"role", "judge_q"}}, "3");
  return Json{{"rules", rules}, {"image_size", {800, 600}}};
}

Json pipeline_config(const fs::path& workdir, const fs::path& source_dir,
                     const fs::path& mock_script, const Json& extra) {
  const auto ep = [](const char* name, const char* role) {
    return Json{{"name", name}, {"base_url", "mock://"}, {"role", role}, {"backoff_base", 0.0}};
  };
  Json cfg{{"workdir", workdir.string()},
           {"source_dir", source_dir.string()},
           {"seed", 7},
           {"offline", true},
           {"workers", 4},
           {"mock_script", mock_script.string()},
           {"endpoints", {ep("chat", "chat"), ep("editor", "image-edit"), ep("painter", "image-generate")}},
           {"agents", {{"router", "chat"},
                       {"instruction", "chat"},
                       {"judge", "chat"},
                       {"generate", "painter"},
                       {"default_edit", "editor"}}}};
  for (const auto& [k, v] : extra.items()) cfg[k] = v;
  return cfg;
}

fs::path write_pipeline_files(const fs::path& dir, const fs::path& source_dir, const MockPlan& plan,
                              const Json& extra) {
  fs::create_directories(dir);
  const auto script = dir / "mock.json";
  write_text(script, pipeline_mock_script(plan).dump(2));
  const auto cfg = dir / "config.json";
  write_text(cfg, pipeline_config(dir / "work", source_dir, script, extra).dump(2));
  return cfg;
}

MockRig::MockRig(const Json& script) : backend(std::make_shared<MockBackend>(MockScript::from_json(script))) {
  ModelGateway::Options o;
  o.offline = true;
  o.mock = backend;
  o.sleep = [](std::chrono::duration<double>) {};
  gateway = std::make_unique<ModelGateway>(store, o);
  const auto ep = [](const char* name, EndpointRole role) {
    EndpointConfig e;
    e.name = name;
    e.base_url = "mock://";
    e.role = role;
    e.backoff_base = 0;
    return e;
  };
  chat = ep("chat", EndpointRole::Chat);
  edit = ep("editor", EndpointRole::ImageEdit);
  generate = ep("painter", EndpointRole::ImageGenerate);
}

Agent MockRig::agent() const { return Agent{*gateway, chat, PromptBank::get("v1"), ChatParams{}}; }

}  // namespace editforge::testing

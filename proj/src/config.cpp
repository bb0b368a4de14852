#include "editforge/config.hpp"

#include <cstdlib>
#include <set>

#include "editforge/blob_store.hpp"
#include "editforge/error.hpp"
#include "editforge/phash.hpp"
#include "editforge/prompt_bank.hpp"

namespace editforge {

namespace {

[[noreturn]] void config_error(const std::string& what) { fail(ErrorCode::ConfigError, what); }

template <typename T>
T get_as(const Json& j, const char* key) {
  try {
    return j.get<T>();
  } catch (const Json::exception&) {
    config_error(std::string("\"") + key + "\" has the wrong type");
  }
}

fs::path resolve(const fs::path& base, const std::string& p) {
  const fs::path path(p);
  return path.is_absolute() ? path : base / path;
}

TaskId task_key(const std::string& s) {
  const auto t = task_from_name(s);
  if (!t) config_error("unknown task \"" + s + "\"");
  return *t;
}

bool env_offline() {
  const char* v = std::getenv("EDITFORGE_OFFLINE");
  return v && std::string_view(v) == "1";
}

void parse_agents(const Json& j, AgentMap& a) {
  if (!j.is_object()) config_error("\"agents\" must be an object");
  const std::map<std::string, std::string*> fields = {
      {"router", &a.router},       {"instruction", &a.instruction},
      {"rewriter", &a.rewriter},   {"judge", &a.judge},
      {"caption", &a.caption},     {"variant", &a.variant},
      {"generate", &a.generate},   {"default_edit", &a.default_edit},
      {"text_edit", &a.text_edit}};
  for (const auto& [key, value] : j.items()) {
    if (key == "edit_overrides") {
      if (!value.is_object()) config_error("\"agents.edit_overrides\" must be an object");
      for (const auto& [task, ep] : value.items())
        a.edit_overrides[task_key(task)] = get_as<std::string>(ep, "agents.edit_overrides");
      continue;
    }
    const auto it = fields.find(key);
    if (it == fields.end()) config_error("unknown agent \"" + key + "\"");
    *it->second = get_as<std::string>(value, key.c_str());
  }
}

}  // namespace

Json merge_overrides(Json base, const Json& overrides) {
  if (overrides.is_null()) return base;
  if (!overrides.is_object()) config_error("overrides must be a JSON object");
  if (base.is_null()) base = Json::object();
  for (const auto& [k, v] : overrides.items()) base[k] = v;
  return base;
}

RunConfig RunConfig::from_json(const Json& j, const fs::path& base_dir) {
  if (!j.is_object()) config_error("config must be a JSON object");
  RunConfig c;
  for (const auto& [key, v] : j.items()) {
    const char* k = key.c_str();
    if (key == "workdir") c.workdir = resolve(base_dir, get_as<std::string>(v, k));
    else if (key == "source_dir") c.source_dir = resolve(base_dir, get_as<std::string>(v, k));
    else if (key == "seed") c.seed = get_as<std::uint64_t>(v, k);
    else if (key == "offline") c.offline = get_as<bool>(v, k);
    else if (key == "workers") c.workers = get_as<int>(v, k);
    else if (key == "mock_script") c.mock_script = resolve(base_dir, get_as<std::string>(v, k));
    else if (key == "endpoints") {
      if (!v.is_array()) config_error("\"endpoints\" must be a list");
      for (const auto& e : v) {
        try {
          c.endpoints.push_back(endpoint_from_json(e));
        } catch (const Json::exception& ex) {
          config_error(std::string("endpoint: ") + ex.what());
        }
      }
    } else if (key == "agents") parse_agents(v, c.agents);
    else if (key == "dedup_threshold") c.dedup_threshold = get_as<int>(v, k);
    else if (key == "quota") c.quota = get_as<std::uint32_t>(v, k);
    else if (key == "variants") c.variants = get_as<std::uint32_t>(v, k);
    else if (key == "ocr_min_conf") c.ocr_min_conf = get_as<double>(v, k);
    else if (key == "min_area_px") c.min_area_px = get_as<double>(v, k);
    else if (key == "router_max_reparse") c.router_max_reparse = get_as<int>(v, k);
    else if (key == "gen_max_retries") c.gen_max_retries = get_as<int>(v, k);
    else if (key == "judge_max_retries") c.judge_max_retries = get_as<int>(v, k);
    else if (key == "max_instruction_chars") c.max_instruction_chars = get_as<std::size_t>(v, k);
    else if (key == "lenient_scores") c.lenient_scores = get_as<bool>(v, k);
    else if (key == "temperature") c.temperature = get_as<double>(v, k);
    else if (key == "max_tokens") c.max_tokens = get_as<int>(v, k);
    else if (key == "prompt_bank_version") c.prompt_bank_version = get_as<std::string>(v, k);
    else if (key == "retrieval") {
      if (!v.is_object()) config_error("\"retrieval\" must be an object");
      for (const auto& [rk, rv] : v.items()) {
        if (rk != "fixture_dir") config_error("unknown retrieval key \"" + rk + "\"");
        if (!rv.is_null()) c.retrieval_fixture_dir = resolve(base_dir, get_as<std::string>(rv, "fixture_dir"));
      }
    } else if (key == "fault_injection") {
      if (v.is_null()) continue;
      if (!v.is_object() || !v.contains("stage") || !v.contains("after"))
        config_error("\"fault_injection\" must be {stage, after}");
      c.fault = FaultPlan{get_as<std::string>(v.at("stage"), "fault_injection.stage"),
                          get_as<std::uint64_t>(v.at("after"), "fault_injection.after")};
    } else if (key == "judge_families") {
      if (!v.is_object()) config_error("\"judge_families\" must be an object");
      for (const auto& [task, fam] : v.items())
        c.judge_families[task_key(task)] = get_as<std::string>(fam, "judge_families");
    } else {
      config_error("unknown config key \"" + key + "\"");
    }
  }
  if (env_offline()) c.offline = true;
  if (!c.fault) c.fault = fault_plan_from_env();
  c.validate();
  return c;
}

RunConfig RunConfig::load(const fs::path& p, const Json& overrides) {
  Json j;
  try {
    j = Json::parse(read_text(p));
  } catch (const Json::exception& e) {
    config_error(p.string() + ": " + e.what());
  } catch (const Error& e) {
    config_error(p.string() + ": " + e.detail());
  }
  return from_json(merge_overrides(std::move(j), overrides), p.parent_path().empty() ? "." : p.parent_path());
}

const EndpointConfig& RunConfig::endpoint(std::string_view name) const {
  for (const auto& e : endpoints)
    if (e.name == name) return e;
  config_error("unknown endpoint \"" + std::string(name) + "\"");
}

const EndpointConfig& RunConfig::agent_endpoint(std::string_view agent) const {
  const auto pick = [&](const std::string& name, const std::string& fallback) -> const std::string& {
    return name.empty() ? fallback : name;
  };
  std::string name;
  if (agent == "router") name = agents.router;
  else if (agent == "instruction") name = agents.instruction;
  else if (agent == "rewriter") name = pick(agents.rewriter, agents.instruction);
  else if (agent == "judge") name = agents.judge;
  else if (agent == "caption") name = pick(agents.caption, agents.instruction);
  else if (agent == "variant") name = pick(agents.variant, agents.instruction);
  else if (agent == "generate") name = agents.generate;
  else config_error("unknown agent \"" + std::string(agent) + "\"");
  if (name.empty()) config_error("agent \"" + std::string(agent) + "\" has no endpoint");
  return endpoint(name);
}

const EndpointConfig& RunConfig::edit_endpoint(TaskId task) const {
  if (const auto it = agents.edit_overrides.find(task); it != agents.edit_overrides.end())
    return endpoint(it->second);
  if (is_text_aware(task) && !agents.text_edit.empty()) return endpoint(agents.text_edit);
  if (agents.default_edit.empty())
    config_error("no edit endpoint for task " + std::string(task_kind(task).key));
  return endpoint(agents.default_edit);
}

bool RunConfig::uses_mock() const {
  for (const auto& e : endpoints)
    if (e.is_mock()) return true;
  return false;
}

void RunConfig::validate() const {
  if (workers < 1) config_error("workers must be >= 1");
  if (quota < 1) config_error("quota must be >= 1");
  if (dedup_threshold < 0 || dedup_threshold > DedupIndex::kMaxThreshold)
    config_error("dedup_threshold must be in [0, 16]");
  if (router_max_reparse < 0 || gen_max_retries < 0 || judge_max_retries < 0)
    config_error("retry counts must be >= 0");
  if (max_instruction_chars == 0) config_error("max_instruction_chars must be > 0");
  if (ocr_min_conf < 0 || ocr_min_conf > 1) config_error("ocr_min_conf must be in [0, 1]");
  if (min_area_px < 0) config_error("min_area_px must be >= 0");
  if (max_tokens < 1) config_error("max_tokens must be >= 1");
  auto bank = PromptBank::get(prompt_bank_version);
  for (const auto& [task, fam] : judge_families) {
    try {
      bank.set_judge_family(task, fam);
    } catch (const Error& e) {
      config_error("judge family for " + std::string(task_kind(task).key) + ": " + e.detail());
    }
  }

  std::set<std::string> names;
  for (const auto& e : endpoints) {
    e.validate();
    if (!names.insert(e.name).second) config_error("duplicate endpoint \"" + e.name + "\"");
    if (offline && !e.is_mock())
      config_error("offline run with non-mock endpoint \"" + e.name + "\"");
  }

  const auto check_role = [&](const std::string& name, EndpointRole role, const char* agent) {
    if (name.empty()) return;
    const auto& e = endpoint(name);
    if (e.role != role)
      config_error(std::string("agent \"") + agent + "\" needs a " +
                   std::string(endpoint_role_name(role)) + " endpoint, \"" + name + "\" is " +
                   std::string(endpoint_role_name(e.role)));
  };
  check_role(agents.router, EndpointRole::Chat, "router");
  check_role(agents.instruction, EndpointRole::Chat, "instruction");
  check_role(agents.rewriter, EndpointRole::Chat, "rewriter");
  check_role(agents.judge, EndpointRole::Chat, "judge");
  check_role(agents.caption, EndpointRole::Chat, "caption");
  check_role(agents.variant, EndpointRole::Chat, "variant");
  check_role(agents.generate, EndpointRole::ImageGenerate, "generate");
  check_role(agents.default_edit, EndpointRole::ImageEdit, "default_edit");
  check_role(agents.text_edit, EndpointRole::ImageEdit, "text_edit");
  for (const auto& [task, name] : agents.edit_overrides) check_role(name, EndpointRole::ImageEdit, "edit_overrides");
  if (mock_script && !fs::exists(*mock_script))
    config_error("mock script " + mock_script->string() + " does not exist");
}

}  // namespace editforge

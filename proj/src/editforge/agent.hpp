#pragma once

#include <optional>
#include <string>
#include <vector>

#include "editforge/error.hpp"
#include "editforge/gateway.hpp"
#include "editforge/prompt_bank.hpp"

namespace editforge {

// One chat-role agent bound to an endpoint and sampling parameters.
struct Agent {
  ModelGateway& gateway;
  const EndpointConfig& endpoint;
  const PromptBank& bank;
  ChatParams params;

  std::string ask(std::string_view role, std::optional<TaskId> task, std::string system,
                  std::string user, std::vector<std::string> images) const {
    ChatRequest req;
    req.system_prompt = std::move(system);
    req.user_text = std::move(user);
    req.images = std::move(images);
    req.params = params;
    req.role = std::string(role);
    req.task = task;
    return gateway.chat(endpoint, req);
  }
};

// Appended to the user text when a reply has to be requested again.
inline std::string corrective_suffix(std::string_view reason) {
  return "\n\nYour previous reply could not be used (" + std::string(reason) +
         "). Follow the required output format exactly.";
}

// Runs attempt(k, last_reason) for k = 0..max_reparse until it stops throwing
// ParseError; the final ParseError propagates. Gateway errors are not retried
// here since the gateway already retries transport failures.
template <typename F>
auto with_reparse(int max_reparse, F&& attempt) -> decltype(attempt(0, std::string())) {
  std::string last_reason;
  for (int k = 0;; ++k) {
    try {
      return attempt(k, last_reason);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ParseError || k >= max_reparse) throw;
      last_reason = e.detail();
    }
  }
}

}  // namespace editforge

#include "editforge/parsers.hpp"

#include <cctype>
#include <vector>

#include "editforge/error.hpp"

namespace editforge {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

[[noreturn]] void parse_error(std::string reason) { fail(ErrorCode::ParseError, std::move(reason)); }

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool iequals(std::string_view a, std::string_view b) { return lower(a) == lower(b); }

std::vector<std::string_view> non_empty_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const auto line = trim(text.substr(pos, nl - pos));
    if (!line.empty()) out.push_back(line);
    pos = nl + 1;
  }
  return out;
}

// Drops "12.", "12)", "(12)", "12:" and "-"/"*" bullets at the start of a line.
std::string_view strip_enumeration(std::string_view s) {
  s = trim(s);
  if (!s.empty() && (s[0] == '-' || s[0] == '*' || s[0] == '+') && s.size() > 1 && is_space(s[1]))
    return trim(s.substr(1));
  std::size_t i = 0;
  const bool paren = !s.empty() && s[0] == '(';
  if (paren) ++i;
  const std::size_t digits_start = i;
  while (i < s.size() && is_digit(s[i])) ++i;
  if (i == digits_start) return s;
  if (i < s.size() && (s[i] == '.' || s[i] == ')' || s[i] == ':')) {
    ++i;
  } else if (!paren) {
    return s;
  }
  if (i < s.size() && !is_space(s[i])) return s;
  return trim(s.substr(i));
}

// Skips whitespace, ASCII punctuation and the UTF-8 en/em dashes.
std::string_view strip_separators(std::string_view s) {
  for (;;) {
    if (s.empty()) return s;
    if (s.size() >= 3 && static_cast<unsigned char>(s[0]) == 0xE2 &&
        static_cast<unsigned char>(s[1]) == 0x80 &&
        (static_cast<unsigned char>(s[2]) == 0x93 || static_cast<unsigned char>(s[2]) == 0x94)) {
      s.remove_prefix(3);
      continue;
    }
    const char c = s[0];
    if (is_space(c) || (std::ispunct(static_cast<unsigned char>(c)) && c != '"' && c != '(')) {
      s.remove_prefix(1);
      continue;
    }
    return s;
  }
}

// Names the router prompt may echo in front of a verdict.
std::vector<std::string_view> router_names(std::size_t i) {
  std::vector<std::string_view> names{taxonomy()[i].name};
  const auto id = static_cast<TaskId>(i);
  if (id == TaskId::SocialKnowledgeReasoning) names.push_back("Social Reasoning");
  if (id == TaskId::ScientificKnowledgeReasoning) names.push_back("Scientific Reasoning");
  return names;
}

std::string_view strip_task_prefix(std::string_view line, std::size_t i) {
  const auto colon = line.find(':');
  if (colon == std::string_view::npos) return line;
  auto head = trim(line.substr(0, colon));
  // Markdown emphasis around the name.
  while (!head.empty() && (head.front() == '*' || head.front() == '_')) head.remove_prefix(1);
  while (!head.empty() && (head.back() == '*' || head.back() == '_')) head.remove_suffix(1);
  for (auto n : router_names(i))
    if (iequals(head, n)) return trim(line.substr(colon + 1));
  return line;
}

struct NumberToken {
  bool integer;
  long long value;  // meaningful for integers only; saturated
};

std::vector<NumberToken> number_tokens(std::string_view s) {
  std::vector<NumberToken> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (!is_digit(s[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    long long v = 0;
    while (i < s.size() && is_digit(s[i])) {
      if (v < 1'000'000'000) v = v * 10 + (s[i] - '0');
      ++i;
    }
    bool integer = true;
    if (i + 1 < s.size() && s[i] == '.' && is_digit(s[i + 1])) {
      integer = false;
      ++i;
      while (i < s.size() && is_digit(s[i])) ++i;
    }
    const bool negative = start > 0 && s[start - 1] == '-' &&
                          (start == 1 || !std::isalnum(static_cast<unsigned char>(s[start - 2])));
    out.push_back({integer, negative ? -v : v});
  }
  return out;
}

bool in_range(long long v) { return v >= 1 && v <= 3; }

}  // namespace

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::size_t utf8_length(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

int parse_single_integer_score(std::string_view text, bool lenient) {
  const auto t = trim(text);
  std::size_t i = (!t.empty() && (t[0] == '+' || t[0] == '-')) ? 1 : 0;
  bool bare = i < t.size();
  for (std::size_t k = i; k < t.size(); ++k) bare = bare && is_digit(t[k]);
  if (bare) {
    const auto toks = number_tokens(t);
    const long long v = toks.front().value;
    if (!in_range(v)) parse_error("out-of-range");
    return static_cast<int>(v);
  }
  if (!lenient) parse_error("not-bare");

  const auto toks = number_tokens(t);
  int hits = 0;
  bool any_integer = false;
  long long found = 0;
  for (const auto& tok : toks) {
    any_integer = any_integer || tok.integer;
    if (tok.integer && in_range(tok.value)) {
      ++hits;
      found = tok.value;
    }
  }
  if (hits == 1) return static_cast<int>(found);
  if (hits > 1) parse_error("multiple-integers");
  if (any_integer) parse_error("out-of-range");
  parse_error("no-integer");
}

VerdictVector parse_router_verdicts(std::string_view text) {
  const auto lines = non_empty_lines(text);
  if (lines.size() != kTaskCount) parse_error("line-count-mismatch");
  VerdictVector out;
  for (std::size_t i = 0; i < kTaskCount; ++i) {
    auto line = strip_task_prefix(strip_enumeration(lines[i]), i);
    std::size_t a = 0;
    while (a < line.size() && !is_alpha(line[a])) ++a;
    std::size_t b = a;
    while (b < line.size() && is_alpha(line[b])) ++b;
    const auto token = lower(line.substr(a, b - a));
    const auto rest = std::string(trim(strip_separators(line.substr(b))));
    if (token == "yes") {
      out[i] = {true, rest};
    } else if (token == "no") {
      out[i] = {false, rest};
    } else {
      out[i] = {false, std::string(line)};
    }
  }
  return out;
}

std::string render_router_verdicts(const VerdictVector& v) {
  std::string out;
  for (const auto& verdict : v) {
    out += verdict.applicable ? "yes" : "no";
    if (!verdict.rationale.empty()) {
      out += " — ";
      out += verdict.rationale;
    }
    out += '\n';
  }
  return out;
}

std::string parse_single_sentence(std::string_view text, std::size_t max_chars) {
  const auto t = trim(text);
  if (t.empty()) parse_error("empty");
  if (utf8_length(t) > max_chars) parse_error("too-long");

  bool in_ascii_quote = false;
  int curly_depth = 0;
  std::size_t groups = 0;  // runs such as "?!" or "..." count once
  std::size_t last_mark = std::string_view::npos;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(t[i]);
    if (c == '"') {
      in_ascii_quote = !in_ascii_quote;
      continue;
    }
    // U+201C and U+201D
    if (c == 0xE2 && i + 2 < t.size() && static_cast<unsigned char>(t[i + 1]) == 0x80) {
      const unsigned char c2 = static_cast<unsigned char>(t[i + 2]);
      if (c2 == 0x9C) ++curly_depth;
      if (c2 == 0x9D && curly_depth > 0) --curly_depth;
      i += 2;
      continue;
    }
    if (in_ascii_quote || curly_depth > 0) continue;
    if (c == '.' || c == '!' || c == '?') {
      if (c == '.' && i > 0 && i + 1 < t.size() && is_digit(t[i - 1]) && is_digit(t[i + 1]))
        continue;
      if (last_mark == std::string_view::npos || last_mark + 1 != i) ++groups;
      last_mark = i;
    }
  }
  if (groups == 0) parse_error("unterminated");
  if (groups > 1 || last_mark != t.size() - 1) parse_error("multi-sentence");
  return std::string(t);
}

std::string parse_caption(std::string_view text) {
  const auto t = trim(text);
  if (t.empty()) parse_error("empty");
  return std::string(t);
}

namespace {

// Returns the aspect when the line is a section heading, plus any inline content
// that followed "Heading:".
std::optional<std::pair<Aspect, std::string_view>> heading_of(std::string_view line) {
  auto s = trim(line);
  while (!s.empty() && (s.front() == '#' || s.front() == '*' || s.front() == '_' || is_space(s.front())))
    s.remove_prefix(1);
  s = strip_enumeration(s);
  std::string_view inline_rest;
  if (const auto colon = s.find(':'); colon != std::string_view::npos) {
    inline_rest = trim(s.substr(colon + 1));
    s = s.substr(0, colon);
  }
  while (!s.empty() && (s.back() == '*' || s.back() == '_' || s.back() == '#' || is_space(s.back())))
    s.remove_suffix(1);
  while (!inline_rest.empty() && (inline_rest.front() == '*' || inline_rest.front() == '_'))
    inline_rest = trim(inline_rest.substr(1));
  std::string name;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '&') name += "and";
    else name += s[i];
  }
  const auto aspect = aspect_from_name(name);
  if (!aspect) return std::nullopt;
  return std::make_pair(*aspect, inline_rest);
}

// "3. text" or "3) text" -> "text".
std::optional<std::string_view> numbered_item(std::string_view line) {
  auto s = trim(line);
  if (!s.empty() && (s[0] == '-' || s[0] == '*') && s.size() > 1 && is_space(s[1])) s = trim(s.substr(1));
  std::size_t i = 0;
  while (i < s.size() && is_digit(s[i])) ++i;
  if (i == 0 || i >= s.size() || (s[i] != '.' && s[i] != ')')) return std::nullopt;
  const auto rest = trim(s.substr(i + 1));
  if (rest.empty()) return std::nullopt;
  return rest;
}

}  // namespace

DetailedCaption parse_detailed_caption(std::string_view text) {
  DetailedCaption dc;
  std::array<bool, kAspectCount> seen{};
  std::optional<Aspect> current;
  for (const auto line : non_empty_lines(text)) {
    if (const auto h = heading_of(line)) {
      current = h->first;
      seen[static_cast<std::size_t>(h->first)] = true;
      if (!h->second.empty()) {
        const auto item = numbered_item(h->second);
        dc.at(h->first).emplace_back(item ? *item : h->second);
      }
      continue;
    }
    if (!current) continue;
    if (const auto item = numbered_item(line)) dc.at(*current).emplace_back(*item);
  }
  for (std::size_t i = 0; i < kAspectCount; ++i) {
    const auto name = std::string(aspect_name(static_cast<Aspect>(i)));
    if (!seen[i]) parse_error("missing-aspect(" + name + ")");
    if (dc.aspects[i].empty()) parse_error("empty-aspect(" + name + ")");
  }
  return dc;
}

std::string render_detailed_caption(const DetailedCaption& dc) {
  std::string out;
  for (std::size_t i = 0; i < kAspectCount; ++i) {
    if (i) out += '\n';
    out += aspect_name(static_cast<Aspect>(i));
    out += ":\n";
    for (std::size_t k = 0; k < dc.aspects[i].size(); ++k) {
      out += std::to_string(k + 1) + ". " + dc.aspects[i][k] + "\n";
    }
  }
  return out;
}

std::string parse_variant_line(std::string_view text) {
  const auto lines = non_empty_lines(text);
  if (lines.empty()) parse_error("empty");
  if (lines.size() > 1) parse_error("multi-line");
  const auto s = strip_enumeration(lines.front());
  if (s.empty()) parse_error("empty");
  return std::string(s);
}

}  // namespace editforge

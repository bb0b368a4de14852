#pragma once

#include <span>
#include <string>
#include <string_view>

#include "editforge/records.hpp"

namespace editforge {

std::string_view trim(std::string_view s);
std::size_t utf8_length(std::string_view s);

// Reply -> 1|2|3. Strict mode accepts only a bare integer (surrounding whitespace
// allowed). Lenient mode also accepts a reply holding exactly one integer in
// [1,3] among its numeric tokens. ParseError reasons: no-integer,
// multiple-integers, out-of-range, and not-bare (strict mode only).
int parse_single_integer_score(std::string_view text, bool lenient = true);

// One non-empty line per task, in taxonomy order. A line is applicable iff its
// first alphabetic token is "yes" (any case); leading enumeration and a
// "<task name>:" prefix are ignored. ParseError(line-count-mismatch) otherwise.
VerdictVector parse_router_verdicts(std::string_view text);

// The canonical rendering: "yes", "yes — <r>", "no" or "no — <r>" per line.
std::string render_router_verdicts(const VerdictVector& v);

// Trimmed single sentence: non-empty, at most max_chars code points, and exactly
// one terminal mark (. ! ?) outside quoted spans, which must end the text. A '.'
// between two digits is not terminal. ParseError reasons: empty, too-long,
// multi-sentence, unterminated.
std::string parse_single_sentence(std::string_view text, std::size_t max_chars = 400);

// Non-empty after trimming; ParseError(empty) otherwise.
std::string parse_caption(std::string_view text);

// Seven headed sections with numbered items. ParseError reasons:
// missing-aspect(<name>), empty-aspect(<name>).
DetailedCaption parse_detailed_caption(std::string_view text);
std::string render_detailed_caption(const DetailedCaption& dc);

// Single non-empty line; a leading enumeration is dropped. ParseError reasons:
// empty, multi-line.
std::string parse_variant_line(std::string_view text);

}  // namespace editforge

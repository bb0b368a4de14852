#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace editforge {

using Bytes = std::vector<std::uint8_t>;

// Lowercase hex SHA-256.
std::string sha256_hex(std::span<const std::uint8_t> data);
std::string sha256_hex(std::string_view text);

// Digest of the concatenation of the given parts, each prefixed by its length so
// that ("ab","c") and ("a","bc") never collide.
std::string digest_of(std::initializer_list<std::string_view> parts);

std::string base64_encode(std::span<const std::uint8_t> data);
// Throws Error(DecodeError) on malformed input.
Bytes base64_decode(std::string_view text);

// First 8 bytes of sha256(text) as an integer; used for derived seeds.
std::uint64_t stable_hash64(std::string_view text);

inline std::span<const std::uint8_t> as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

}  // namespace editforge

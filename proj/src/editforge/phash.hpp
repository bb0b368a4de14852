#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "editforge/image.hpp"
#include "editforge/records.hpp"

namespace editforge {

// 64-bit DCT perceptual hash:
//   luma -> 32x32 bilinear (half-pixel centres, edge clamp) -> orthonormal 2-D DCT-II
//   -> top-left 8x8 block. Bit 63 (the DC slot) is a constant 0 filler; each of the
//   other 63 bits, row-major MSB first, is set iff that coefficient exceeds the
//   median of the 63 AC coefficients. Coefficients with |c| < 1e-6 are taken as 0
//   so flat images hash identically regardless of floating-point noise.
std::uint64_t phash(const Image& img);
std::uint64_t phash_bytes(std::span<const std::uint8_t> encoded);

inline int hamming(std::uint64_t a, std::uint64_t b) { return std::popcount(a ^ b); }

// Retained (phash, id) entries with the invariant that no two lie within the
// threshold. Backed by a BK-tree over Hamming distance.
class DedupIndex {
 public:
  static constexpr int kMaxThreshold = 16;

  explicit DedupIndex(int threshold = 4);

  int threshold() const { return threshold_; }
  std::size_t size() const { return nodes_.size(); }

  // Id of some retained entry within the threshold of h, if any.
  std::optional<std::string> find_near(std::uint64_t h) const;

  // Greedy first-wins admission: inserts and returns true iff no retained entry is
  // within the threshold.
  bool admit(std::uint64_t h, const std::string& id);

  // Entries in insertion order.
  std::vector<std::pair<std::uint64_t, std::string>> entries() const;

  Json to_json() const;
  static DedupIndex from_json(const Json& j);

 private:
  struct Node {
    std::uint64_t hash;
    std::string id;
    std::vector<std::pair<int, std::uint32_t>> children;  // (distance, node index)
  };
  void insert(std::uint64_t h, const std::string& id);

  int threshold_;
  std::vector<Node> nodes_;
};

struct DedupResult {
  std::vector<SourceRecord> retained;
  std::size_t dropped = 0;
};

DedupResult dedup(const std::vector<SourceRecord>& stream, DedupIndex& index);

}  // namespace editforge

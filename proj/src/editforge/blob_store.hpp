#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "editforge/digest.hpp"

namespace editforge {

namespace fs = std::filesystem;

Bytes read_file(const fs::path& p);
std::string read_text(const fs::path& p);
// Write to a temporary sibling, fsync, then rename over the target.
void write_file_atomic(const fs::path& p, std::span<const std::uint8_t> data);
void write_file_atomic(const fs::path& p, std::string_view text);

// Content-addressed files under <root>/blobs/<first2>/<digest>.
class BlobStore {
 public:
  explicit BlobStore(fs::path workdir);

  // Stores bytes and returns their sha256 hex. Existing blobs are not rewritten.
  std::string put(std::span<const std::uint8_t> bytes);
  Bytes get(std::string_view id) const;  // IoError when missing
  bool contains(std::string_view id) const;

  // Path of the blob, or of a sidecar stored next to it (suffix like ".ocr.json").
  fs::path path(std::string_view id, std::string_view suffix = {}) const;

  void put_sidecar(std::string_view id, std::string_view suffix, std::string_view text);
  bool has_sidecar(std::string_view id, std::string_view suffix) const;

 private:
  fs::path root_;
};

}  // namespace editforge

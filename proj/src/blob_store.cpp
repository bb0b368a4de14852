#include "editforge/blob_store.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "editforge/error.hpp"

namespace editforge {

namespace {

std::atomic<unsigned> g_tmp_counter{0};

void write_all_fd(int fd, const std::uint8_t* data, std::size_t n, const fs::path& p) {
  while (n > 0) {
    const ssize_t w = ::write(fd, data, n);
    if (w < 0) {
      ::close(fd);
      fail(ErrorCode::IoError, "write failed: " + p.string());
    }
    data += w;
    n -= static_cast<std::size_t>(w);
  }
}

}  // namespace

Bytes read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open " + p.string());
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const fs::path& p, std::span<const std::uint8_t> data) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  auto tmp = p;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(g_tmp_counter++);
  const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
  if (fd < 0) fail(ErrorCode::IoError, "cannot create " + tmp.string());
  write_all_fd(fd, data.data(), data.size(), tmp);
  ::fsync(fd);
  ::close(fd);
  std::error_code ec;
  fs::rename(tmp, p, ec);
  if (ec) fail(ErrorCode::IoError, "rename failed: " + p.string() + ": " + ec.message());
}

void write_file_atomic(const fs::path& p, std::string_view text) {
  write_file_atomic(p, as_bytes(text));
}

BlobStore::BlobStore(fs::path workdir) : root_(std::move(workdir) / "blobs") {
  fs::create_directories(root_);
}

fs::path BlobStore::path(std::string_view id, std::string_view suffix) const {
  require(id.size() >= 2, "blob id too short");
  std::string name(id);
  name.append(suffix);
  return root_ / std::string(id.substr(0, 2)) / name;
}

std::string BlobStore::put(std::span<const std::uint8_t> bytes) {
  auto id = sha256_hex(bytes);
  const auto p = path(id);
  if (!fs::exists(p)) write_file_atomic(p, bytes);
  return id;
}

Bytes BlobStore::get(std::string_view id) const {
  const auto p = path(id);
  if (!fs::exists(p)) fail(ErrorCode::IoError, "missing blob " + std::string(id));
  return read_file(p);
}

bool BlobStore::contains(std::string_view id) const { return fs::exists(path(id)); }

void BlobStore::put_sidecar(std::string_view id, std::string_view suffix, std::string_view text) {
  write_file_atomic(path(id, suffix), text);
}

bool BlobStore::has_sidecar(std::string_view id, std::string_view suffix) const {
  return fs::exists(path(id, suffix));
}

}  // namespace editforge

#include "editforge/phash.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "editforge/error.hpp"

namespace editforge {

namespace {

constexpr int kSide = 32;
constexpr int kBlock = 8;

using Plane = std::array<std::array<double, kSide>, kSide>;

Plane resize_luma(const Image& img) {
  const auto y = luma(img);
  const auto w = static_cast<int>(img.width);
  const auto h = static_cast<int>(img.height);
  const auto sample = [&](int px, int py) { return y[static_cast<std::size_t>(py) * w + px]; };
  // Source coordinate of a destination pixel centre, clamped to the valid range.
  const auto src = [](int d, int n) {
    const double s = (d + 0.5) * n / kSide - 0.5;
    return std::clamp(s, 0.0, static_cast<double>(n - 1));
  };
  Plane out{};
  for (int dy = 0; dy < kSide; ++dy) {
    const double sy = src(dy, h);
    const int y0 = static_cast<int>(std::floor(sy));
    const int y1 = std::min(y0 + 1, h - 1);
    const double fy = sy - y0;
    for (int dx = 0; dx < kSide; ++dx) {
      const double sx = src(dx, w);
      const int x0 = static_cast<int>(std::floor(sx));
      const int x1 = std::min(x0 + 1, w - 1);
      const double fx = sx - x0;
      const double top = sample(x0, y0) * (1 - fx) + sample(x1, y0) * fx;
      const double bot = sample(x0, y1) * (1 - fx) + sample(x1, y1) * fx;
      out[dy][dx] = top * (1 - fy) + bot * fy;
    }
  }
  return out;
}

const std::array<std::array<double, kSide>, kBlock>& dct_basis() {
  static const auto basis = [] {
    std::array<std::array<double, kSide>, kBlock> b{};
    for (int u = 0; u < kBlock; ++u) {
      const double a = u == 0 ? std::sqrt(1.0 / kSide) : std::sqrt(2.0 / kSide);
      for (int x = 0; x < kSide; ++x)
        b[u][x] = a * std::cos(std::numbers::pi * (2 * x + 1) * u / (2.0 * kSide));
    }
    return b;
  }();
  return basis;
}

}  // namespace

std::uint64_t phash(const Image& img) {
  require(img.width > 0 && img.height > 0, "phash of an empty image");
  const Plane p = resize_luma(img);
  const auto& c = dct_basis();

  // Separable transform restricted to the 8 lowest frequencies on each axis.
  std::array<std::array<double, kSide>, kBlock> rows{};
  for (int u = 0; u < kBlock; ++u)
    for (int x = 0; x < kSide; ++x) {
      double s = 0;
      for (int y = 0; y < kSide; ++y) s += c[u][y] * p[y][x];
      rows[u][x] = s;
    }
  std::array<double, kBlock * kBlock> coef{};
  for (int u = 0; u < kBlock; ++u)
    for (int v = 0; v < kBlock; ++v) {
      double s = 0;
      for (int x = 0; x < kSide; ++x) s += c[v][x] * rows[u][x];
      coef[u * kBlock + v] = std::abs(s) < 1e-6 ? 0.0 : s;
    }

  std::array<double, kBlock * kBlock - 1> ac{};
  std::copy(coef.begin() + 1, coef.end(), ac.begin());
  std::nth_element(ac.begin(), ac.begin() + ac.size() / 2, ac.end());
  const double median = ac[ac.size() / 2];

  std::uint64_t h = 0;
  for (int k = 1; k < kBlock * kBlock; ++k)
    if (coef[k] > median) h |= std::uint64_t{1} << (63 - k);
  return h;
}

std::uint64_t phash_bytes(std::span<const std::uint8_t> encoded) {
  return phash(decode_image(encoded));
}

DedupIndex::DedupIndex(int threshold) : threshold_(threshold) {
  if (threshold < 0 || threshold > kMaxThreshold)
    fail(ErrorCode::ConfigError, "dedup threshold must be within 0..16");
}

std::optional<std::string> DedupIndex::find_near(std::uint64_t h) const {
  if (nodes_.empty()) return std::nullopt;
  std::vector<std::uint32_t> stack{0};
  while (!stack.empty()) {
    const Node& n = nodes_[stack.back()];
    stack.pop_back();
    const int d = hamming(h, n.hash);
    if (d <= threshold_) return n.id;
    for (const auto& [cd, child] : n.children)
      if (cd >= d - threshold_ && cd <= d + threshold_) stack.push_back(child);
  }
  return std::nullopt;
}

void DedupIndex::insert(std::uint64_t h, const std::string& id) {
  const auto idx = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back({h, id, {}});
  if (idx == 0) return;
  std::uint32_t cur = 0;
  for (;;) {
    const int d = hamming(h, nodes_[cur].hash);
    auto& kids = nodes_[cur].children;
    const auto it = std::find_if(kids.begin(), kids.end(), [d](const auto& e) { return e.first == d; });
    if (it == kids.end()) {
      kids.emplace_back(d, idx);
      return;
    }
    cur = it->second;
  }
}

bool DedupIndex::admit(std::uint64_t h, const std::string& id) {
  if (find_near(h)) return false;
  insert(h, id);
  return true;
}

std::vector<std::pair<std::uint64_t, std::string>> DedupIndex::entries() const {
  std::vector<std::pair<std::uint64_t, std::string>> out;
  out.reserve(nodes_.size());
  for (const auto& n : nodes_) out.emplace_back(n.hash, n.id);
  return out;
}

Json DedupIndex::to_json() const {
  Json arr = Json::array();
  for (const auto& n : nodes_) arr.push_back(Json::array({phash_hex(n.hash), n.id}));
  return Json{{"threshold", threshold_}, {"entries", arr}};
}

DedupIndex DedupIndex::from_json(const Json& j) {
  DedupIndex idx(j.at("threshold").get<int>());
  for (const auto& e : j.at("entries"))
    idx.insert(phash_from_hex(e.at(0).get<std::string>()), e.at(1).get<std::string>());
  return idx;
}

DedupResult dedup(const std::vector<SourceRecord>& stream, DedupIndex& index) {
  DedupResult out;
  for (const auto& r : stream) {
    if (index.admit(r.phash, r.id)) out.retained.push_back(r);
    else ++out.dropped;
  }
  return out;
}

}  // namespace editforge

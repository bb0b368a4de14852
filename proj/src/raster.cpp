#include "editforge/raster.hpp"

#include <algorithm>
#include <cmath>

#include "editforge/error.hpp"

namespace editforge {

namespace {

double cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

int sign(double v) { return (v > 0) - (v < 0); }

bool segments_touch(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int d1 = sign(cross(c, d, a)), d2 = sign(cross(c, d, b));
  const int d3 = sign(cross(a, b, c)), d4 = sign(cross(a, b, d));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return (d1 == 0 && on_segment(a, c, d)) || (d2 == 0 && on_segment(b, c, d)) ||
         (d3 == 0 && on_segment(c, a, b)) || (d4 == 0 && on_segment(d, a, b));
}

std::vector<char32_t> decode_utf8(std::string_view s) {
  std::vector<char32_t> out;
  for (std::size_t i = 0; i < s.size();) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : (c >> 3) == 0x1E ? 4 : 1;
    char32_t cp = len == 1 ? c : c & (0x7F >> len);
    for (std::size_t k = 1; k < len && i + k < s.size(); ++k)
      cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
    out.push_back(cp);
    i += len;
  }
  return out;
}

}  // namespace

double polygon_area(const std::vector<Point>& poly) {
  double s = 0;
  for (std::size_t i = 0, n = poly.size(); i < n; ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % n];
    s += a.x * b.y - b.x * a.y;
  }
  return std::abs(s) / 2;
}

bool polygon_is_simple(const std::vector<Point>& poly) {
  const std::size_t n = poly.size();
  if (n < 3 || polygon_area(poly) <= 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_touch(poly[i], poly[(i + 1) % n], poly[j], poly[(j + 1) % n])) return false;
    }
  }
  return true;
}

PixelBox bounding_box(const std::vector<Point>& poly) {
  require(!poly.empty(), "bounding box of an empty polygon");
  double x0 = poly[0].x, x1 = poly[0].x, y0 = poly[0].y, y1 = poly[0].y;
  for (const auto& p : poly) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  return {static_cast<std::int64_t>(std::floor(x0)), static_cast<std::int64_t>(std::floor(y0)),
          static_cast<std::int64_t>(std::ceil(x1)), static_cast<std::int64_t>(std::ceil(y1))};
}

Image rasterize_mask(const std::vector<Point>& poly, std::uint32_t width, std::uint32_t height) {
  require(poly.size() >= 3, "mask polygon needs at least 3 vertices");
  Image mask(width, height, 1, 0);
  std::vector<double> xs;
  for (std::uint32_t y = 0; y < height; ++y) {
    const double yc = y + 0.5;
    xs.clear();
    for (std::size_t i = 0, n = poly.size(); i < n; ++i) {
      const auto& a = poly[i];
      const auto& b = poly[(i + 1) % n];
      if ((a.y <= yc) == (b.y <= yc)) continue;
      xs.push_back(a.x + (yc - a.y) * (b.x - a.x) / (b.y - a.y));
    }
    std::sort(xs.begin(), xs.end());
    for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
      // Pixels whose centre lies in [xa, xb).
      const auto from = static_cast<std::int64_t>(std::ceil(xs[k] - 0.5));
      const auto to = static_cast<std::int64_t>(std::ceil(xs[k + 1] - 0.5));
      for (std::int64_t x = std::max<std::int64_t>(from, 0); x < std::min<std::int64_t>(to, width); ++x)
        *mask.at(static_cast<std::uint32_t>(x), y) = 255;
    }
  }
  return mask;
}

int glyph_scale(std::size_t chars, std::int64_t box_w, std::int64_t box_h) {
  if (chars == 0) return 0;
  const auto by_w = box_w / static_cast<std::int64_t>(chars * kGlyphWidth);
  const auto by_h = box_h / kGlyphHeight;
  return static_cast<int>(std::max<std::int64_t>(0, std::min(by_w, by_h)));
}

Image render_glyph_overlay(std::string_view text, const std::vector<Point>& poly,
                           std::uint32_t width, std::uint32_t height) {
  Image canvas(width, height, 1, 0);
  const auto cps = decode_utf8(text);
  if (cps.empty()) return canvas;
  const PixelBox box = bounding_box(poly);
  const int scale = std::max(1, glyph_scale(cps.size(), box.width(), box.height()));
  const std::int64_t tw = static_cast<std::int64_t>(cps.size()) * kGlyphWidth * scale;
  const std::int64_t th = std::int64_t{kGlyphHeight} * scale;
  // Floor division keeps the offset well defined when the text overflows the box.
  const auto half = [](std::int64_t v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); };
  const std::int64_t ox = box.x0 + half(box.width() - tw);
  const std::int64_t oy = box.y0 + half(box.height() - th);
  const std::int64_t cx0 = std::max<std::int64_t>(box.x0, 0), cx1 = std::min<std::int64_t>(box.x1, width);
  const std::int64_t cy0 = std::max<std::int64_t>(box.y0, 0), cy1 = std::min<std::int64_t>(box.y1, height);

  for (std::size_t i = 0; i < cps.size(); ++i) {
    const char32_t cp = cps[i];
    const auto& glyph = kGlyphs[(cp >= 0x20 && cp <= 0x7E) ? cp - 0x20 : '?' - 0x20];
    for (int gy = 0; gy < kGlyphHeight; ++gy)
      for (int gx = 0; gx < kGlyphWidth; ++gx) {
        if (!((glyph[gy] >> (kGlyphWidth - 1 - gx)) & 1)) continue;
        const std::int64_t px = ox + (static_cast<std::int64_t>(i) * kGlyphWidth + gx) * scale;
        const std::int64_t py = oy + std::int64_t{gy} * scale;
        for (int sy = 0; sy < scale; ++sy)
          for (int sx = 0; sx < scale; ++sx) {
            const auto x = px + sx, y = py + sy;
            if (x < cx0 || x >= cx1 || y < cy0 || y >= cy1) continue;
            *canvas.at(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)) = 255;
          }
      }
  }
  return canvas;
}

}  // namespace editforge

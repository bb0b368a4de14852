#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "editforge/image.hpp"
#include "editforge/records.hpp"

namespace editforge {

inline constexpr int kGlyphWidth = 6;
inline constexpr int kGlyphHeight = 11;
// Printable ASCII 0x20..0x7E; row bytes with bit (kGlyphWidth-1) as the left column.
extern const std::array<std::array<std::uint8_t, kGlyphHeight>, 95> kGlyphs;

double polygon_area(const std::vector<Point>& poly);  // absolute shoelace area
// At least 3 vertices, non-zero area, and no two non-adjacent edges touch.
bool polygon_is_simple(const std::vector<Point>& poly);

struct PixelBox {
  std::int64_t x0, y0, x1, y1;  // half-open [x0,x1) x [y0,y1)
  std::int64_t width() const { return x1 - x0; }
  std::int64_t height() const { return y1 - y0; }
};
// Smallest integer box covering the polygon.
PixelBox bounding_box(const std::vector<Point>& poly);

// Binary single-channel mask of the given size: 255 where the pixel centre
// (x+0.5, y+0.5) lies inside the polygon under the even-odd rule, else 0.
Image rasterize_mask(const std::vector<Point>& poly, std::uint32_t width, std::uint32_t height);

// Largest integer glyph scale at which text fits the box; 0 when even scale 1
// does not fit.
int glyph_scale(std::size_t chars, std::int64_t box_w, std::int64_t box_h);

// Single-channel canvas of the given size, black except for the text drawn in
// white, centred in the polygon's bounding box at glyph_scale (1 when nothing
// fits, clipped to the box). Characters outside printable ASCII render as '?'.
Image render_glyph_overlay(std::string_view text, const std::vector<Point>& poly,
                           std::uint32_t width, std::uint32_t height);

}  // namespace editforge

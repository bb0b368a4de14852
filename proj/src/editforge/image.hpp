#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "editforge/digest.hpp"

namespace editforge {

enum class ImageFormat { Png, Jpeg };

std::string_view format_name(ImageFormat f);

// 8-bit interleaved pixels, row-major, no padding. channels is 1 (gray) or 3 (RGB).
struct Image {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  int channels = 3;
  std::vector<std::uint8_t> pixels;

  Image() = default;
  Image(std::uint32_t w, std::uint32_t h, int ch, std::uint8_t fill = 0)
      : width(w), height(h), channels(ch), pixels(std::size_t{w} * h * ch, fill) {}

  std::uint8_t* at(std::uint32_t x, std::uint32_t y) {
    return pixels.data() + (std::size_t{y} * width + x) * channels;
  }
  const std::uint8_t* at(std::uint32_t x, std::uint32_t y) const {
    return pixels.data() + (std::size_t{y} * width + x) * channels;
  }
  bool operator==(const Image&) const = default;
};

std::optional<ImageFormat> sniff_format(std::span<const std::uint8_t> bytes);

// Decodes PNG or JPEG into RGB (gray and alpha inputs are converted). Throws
// DecodeError for anything that is not a complete, valid image.
Image decode_image(std::span<const std::uint8_t> bytes);

struct ImageInfo {
  std::uint32_t width;
  std::uint32_t height;
  ImageFormat format;
};
// Full decode, so a truncated file is rejected rather than just its header read.
ImageInfo probe_image(std::span<const std::uint8_t> bytes);

// PNG with fixed encoder settings; the same pixels always give the same bytes.
Bytes encode_png(const Image& img);

// Rec. 601 luma in [0,255] as doubles, row-major.
std::vector<double> luma(const Image& img);

}  // namespace editforge

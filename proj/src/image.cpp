#include "editforge/image.hpp"

#include <jpeglib.h>
#include <png.h>

#include <csetjmp>
#include <cstdio>
#include <cstring>

#include "editforge/error.hpp"

namespace editforge {

namespace {

constexpr std::size_t kMaxPixels = std::size_t{1} << 28;

Image decode_png(std::span<const std::uint8_t> bytes) {
  png_image pimg;
  std::memset(&pimg, 0, sizeof pimg);
  pimg.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&pimg, bytes.data(), bytes.size()))
    fail(ErrorCode::DecodeError, std::string("png: ") + pimg.message);
  if (pimg.width == 0 || pimg.height == 0 || std::size_t{pimg.width} * pimg.height > kMaxPixels) {
    png_image_free(&pimg);
    fail(ErrorCode::DecodeError, "png: unsupported dimensions");
  }
  // Composite any alpha onto black so the result is plain RGB.
  pimg.format = PNG_FORMAT_RGB;
  Image out(pimg.width, pimg.height, 3);
  png_color black{0, 0, 0};
  if (!png_image_finish_read(&pimg, &black, out.pixels.data(), 0, nullptr)) {
    const std::string msg = pimg.message;
    png_image_free(&pimg);
    fail(ErrorCode::DecodeError, "png: " + msg);
  }
  return out;
}

struct JpegErr {
  jpeg_error_mgr mgr;
  std::jmp_buf jump;
  char message[JMSG_LENGTH_MAX];
};

void jpeg_error_exit(j_common_ptr cinfo) {
  auto* err = reinterpret_cast<JpegErr*>(cinfo->err);
  (*cinfo->err->format_message)(cinfo, err->message);
  std::longjmp(err->jump, 1);
}

void jpeg_silent(j_common_ptr, int) {}

// Plain C state only between setjmp and longjmp; no destructors are skipped.
bool decode_jpeg_raw(std::span<const std::uint8_t> bytes, Image& out, char* message) {
  jpeg_decompress_struct cinfo;
  JpegErr err;
  cinfo.err = jpeg_std_error(&err.mgr);
  err.mgr.error_exit = jpeg_error_exit;
  err.mgr.emit_message = jpeg_silent;
  err.message[0] = '\0';
  if (setjmp(err.jump)) {
    std::strncpy(message, err.message, JMSG_LENGTH_MAX);
    jpeg_destroy_decompress(&cinfo);
    return false;
  }
  jpeg_create_decompress(&cinfo);
  jpeg_mem_src(&cinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
  jpeg_read_header(&cinfo, TRUE);
  cinfo.out_color_space = JCS_RGB;
  jpeg_start_decompress(&cinfo);
  if (cinfo.output_width == 0 || cinfo.output_height == 0 ||
      std::size_t{cinfo.output_width} * cinfo.output_height > kMaxPixels ||
      cinfo.output_components != 3) {
    std::strncpy(message, "unsupported dimensions", JMSG_LENGTH_MAX);
    jpeg_destroy_decompress(&cinfo);
    return false;
  }
  out.width = cinfo.output_width;
  out.height = cinfo.output_height;
  out.channels = 3;
  out.pixels.resize(std::size_t{out.width} * out.height * 3);
  while (cinfo.output_scanline < cinfo.output_height) {
    JSAMPROW row = out.pixels.data() + std::size_t{cinfo.output_scanline} * out.width * 3;
    jpeg_read_scanlines(&cinfo, &row, 1);
  }
  // libjpeg tolerates premature EOF with a warning; treat it as corrupt.
  const bool truncated = err.mgr.num_warnings > 0;
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  if (truncated) {
    std::strncpy(message, "corrupt or truncated data", JMSG_LENGTH_MAX);
    return false;
  }
  return true;
}

Image decode_jpeg(std::span<const std::uint8_t> bytes) {
  Image out;
  char message[JMSG_LENGTH_MAX] = {0};
  if (!decode_jpeg_raw(bytes, out, message))
    fail(ErrorCode::DecodeError, std::string("jpeg: ") + message);
  return out;
}

}  // namespace

std::string_view format_name(ImageFormat f) { return f == ImageFormat::Png ? "png" : "jpeg"; }

std::optional<ImageFormat> sniff_format(std::span<const std::uint8_t> b) {
  static constexpr std::uint8_t kPng[] = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
  if (b.size() >= 8 && std::memcmp(b.data(), kPng, 8) == 0) return ImageFormat::Png;
  if (b.size() >= 3 && b[0] == 0xff && b[1] == 0xd8 && b[2] == 0xff) return ImageFormat::Jpeg;
  return std::nullopt;
}

Image decode_image(std::span<const std::uint8_t> bytes) {
  const auto fmt = sniff_format(bytes);
  if (!fmt) fail(ErrorCode::DecodeError, "unrecognised image format");
  return *fmt == ImageFormat::Png ? decode_png(bytes) : decode_jpeg(bytes);
}

ImageInfo probe_image(std::span<const std::uint8_t> bytes) {
  const auto img = decode_image(bytes);
  return {img.width, img.height, *sniff_format(bytes)};
}

namespace {

void png_append(png_structp png, png_bytep data, png_size_t n) {
  auto* out = static_cast<Bytes*>(png_get_io_ptr(png));
  out->insert(out->end(), data, data + n);
}

[[noreturn]] void png_encode_error(png_structp png, png_const_charp msg) {
  *static_cast<std::string*>(png_get_error_ptr(png)) = msg;
  png_longjmp(png, 1);
}

void png_ignore_warning(png_structp, png_const_charp) {}

}  // namespace

Bytes encode_png(const Image& img) {
  require(img.channels == 1 || img.channels == 3, "encode_png expects 1 or 3 channels");
  require(img.width > 0 && img.height > 0, "encode_png expects a non-empty image");
  std::string error;
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &error, png_encode_error, png_ignore_warning);
  if (!png) fail(ErrorCode::Internal, "png encode: out of memory");
  png_infop info = png_create_info_struct(png);
  Bytes out;
  out.reserve(img.pixels.size() / 4 + 1024);
  std::vector<png_bytep> rows(img.height);
  for (std::uint32_t y = 0; y < img.height; ++y)
    rows[y] = const_cast<png_bytep>(img.pixels.data() + std::size_t{y} * img.width * img.channels);
  if (!info || setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    fail(ErrorCode::Internal, "png encode: " + (error.empty() ? std::string("out of memory") : error));
  }
  png_set_write_fn(png, &out, png_append, nullptr);
  // Fixed fast settings: no row filters, zlib level 1.
  png_set_filter(png, PNG_FILTER_TYPE_BASE, PNG_FILTER_NONE);
  png_set_compression_level(png, 1);
  png_set_IHDR(png, info, img.width, img.height, 8, img.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_BASE, PNG_FILTER_TYPE_BASE);
  png_write_info(png, info);
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
}

std::vector<double> luma(const Image& img) {
  std::vector<double> out(std::size_t{img.width} * img.height);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint8_t* p = img.pixels.data() + i * img.channels;
    out[i] = img.channels == 1 ? p[0] : 0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2];
  }
  return out;
}

}  // namespace editforge

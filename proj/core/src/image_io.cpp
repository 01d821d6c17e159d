#include "scaff/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "scaff/error.hpp"

namespace scaff {
namespace {

namespace fs = std::filesystem;

constexpr std::array<unsigned char, 8> kPngSignature = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};

std::vector<unsigned char> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::kIo, "error reading " + path.string());
  return bytes;
}

[[noreturn]] void unsupported(const fs::path& path, const std::string& why) {
  throw Error(ErrorCode::kUnsupportedFormat, path.string() + ": " + why);
}

Raster decode_png(const std::vector<unsigned char>& bytes, const fs::path& path) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    unsupported(path, std::string("invalid PNG: ") + image.message);
  }
  const auto fail = [&](const std::string& why) {
    png_image_free(&image);
    unsupported(path, why);
  };
  if (image.format & PNG_FORMAT_FLAG_LINEAR) fail("16-bit PNG is not supported");
  if (image.format & (PNG_FORMAT_FLAG_COLOR | PNG_FORMAT_FLAG_COLORMAP)) {
    fail("only grayscale PNG is supported");
  }
  if (image.format & PNG_FORMAT_FLAG_ALPHA) fail("grayscale+alpha PNG is not supported");
  if (image.width < 1 || image.height < 1) fail("empty image");

  image.format = PNG_FORMAT_GRAY;
  std::vector<Pixel> pixels(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, pixels.data(), 0, nullptr)) {
    const std::string message = image.message;
    png_image_free(&image);
    unsupported(path, "PNG decode failed: " + message);
  }
  return Raster(static_cast<int>(image.width), static_cast<int>(image.height),
                std::move(pixels));
}

// Cursor over a PGM header: whitespace-separated decimal fields, with
// '#' comments running to end of line.
class PgmHeader {
 public:
  PgmHeader(const std::vector<unsigned char>& bytes, const fs::path& path)
      : bytes_(bytes), path_(path) {}

  long next_number() {
    skip_space_and_comments();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
      unsupported(path_, "malformed PGM header");
    }
    long value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_++] - '0');
      if (value > 1'000'000'000) unsupported(path_, "PGM header value too large");
    }
    return value;
  }

  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  const std::vector<unsigned char>& bytes_;
  const fs::path& path_;
  std::size_t pos_ = 2;  // past the magic number
};

Raster decode_pgm(const std::vector<unsigned char>& bytes, const fs::path& path) {
  const bool binary = bytes[1] == '5';
  PgmHeader header(bytes, path);
  const long width = header.next_number();
  const long height = header.next_number();
  const long maxval = header.next_number();
  if (width < 1 || height < 1) unsupported(path, "empty PGM image");
  if (maxval < 1 || maxval > 255) {
    unsupported(path, "PGM maxval " + std::to_string(maxval) + " is not 8-bit");
  }
  const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<Pixel> pixels;
  pixels.reserve(count);

  if (binary) {
    header.advance(1);  // single whitespace byte before the raster
    if (bytes.size() < header.pos() + count) unsupported(path, "truncated PGM data");
    pixels.assign(bytes.begin() + static_cast<std::ptrdiff_t>(header.pos()),
                  bytes.begin() + static_cast<std::ptrdiff_t>(header.pos() + count));
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      const long v = header.next_number();
      if (v > maxval) unsupported(path, "PGM sample exceeds maxval");
      pixels.push_back(static_cast<Pixel>(v));
    }
  }
  return Raster(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

bool has_pgm_extension(const fs::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".pgm";
}

}  // namespace

void FillConfig::validate() const {
  palette.validate();
  if (strict && threshold) {
    throw Error(ErrorCode::kInvalidArgument, "strict mode cannot be combined with a threshold");
  }
}

Raster read_grayscale(const fs::path& path) {
  const auto bytes = read_file(path);
  if (bytes.size() >= kPngSignature.size() &&
      std::equal(kPngSignature.begin(), kPngSignature.end(), bytes.begin())) {
    return decode_png(bytes, path);
  }
  if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '5' || bytes[1] == '2')) {
    return decode_pgm(bytes, path);
  }
  unsupported(path, "not a PNG or PGM (P2/P5) file");
}

void binarize(Raster& img, Pixel threshold, const Palette& palette) {
  for (auto& px : img.pixels()) {
    px = px >= threshold ? palette.boundary : palette.background;
  }
}

Raster decode_image(const fs::path& path, const FillConfig& config) {
  config.validate();
  Raster img = read_grayscale(path);
  if (config.threshold) {
    binarize(img, *config.threshold, config.palette);
  } else if (config.strict) {
    try {
      validate_boundary_image(img, config.palette);
    } catch (const Error& e) {
      throw Error(e.code(), path.string() + ": " + e.what());
    }
  }
  return img;
}

void encode_image(const Raster& img, const fs::path& path) {
  if (has_pgm_extension(path)) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
    out << "P5\n" << img.width() << ' ' << img.height() << "\n255\n";
    const auto px = img.pixels();
    out.write(reinterpret_cast<const char*>(px.data()), static_cast<std::streamsize>(px.size()));
    if (!out) throw Error(ErrorCode::kIo, "error writing " + path.string());
    return;
  }

  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(img.width());
  image.height = static_cast<png_uint_32>(img.height());
  image.format = PNG_FORMAT_GRAY;
  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&image, nullptr, &size, 0, img.pixels().data(), 0, nullptr)) {
    throw Error(ErrorCode::kIo, std::string("PNG encode failed: ") + image.message);
  }
  std::vector<unsigned char> buffer(size);
  if (!png_image_write_to_memory(&image, buffer.data(), &size, 0, img.pixels().data(), 0,
                                 nullptr)) {
    throw Error(ErrorCode::kIo, std::string("PNG encode failed: ") + image.message);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(buffer.data()), static_cast<std::streamsize>(size));
  if (!out) throw Error(ErrorCode::kIo, "error writing " + path.string());
}

}  // namespace scaff

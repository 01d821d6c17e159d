#include "scaff/raster.hpp"

#include <algorithm>
#include <string>

#include "scaff/error.hpp"

namespace scaff {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kOutOfBounds: return "out-of-bounds";
    case ErrorCode::kSeedAlreadyNewColor: return "seed-already-new-color";
    case ErrorCode::kDimensionTooSmall: return "dimension-too-small";
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kDuplicateMapping: return "duplicate-mapping";
    case ErrorCode::kInvalidPalette: return "invalid-palette";
    case ErrorCode::kStrayValue: return "stray-value";
    case ErrorCode::kInvariantViolation: return "invariant-violation";
    case ErrorCode::kSizeTooSmall: return "size-too-small";
    case ErrorCode::kInsufficientPoints: return "insufficient-points";
    case ErrorCode::kDegenerateFit: return "degenerate-fit";
    case ErrorCode::kUnsupportedFormat: return "unsupported-format";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

namespace {

constexpr std::array<PixelCoord, 8> kOffsets = {{
    {0, -1}, {0, 1}, {-1, 0}, {1, 0},     // 4-neighbourhood
    {-1, -1}, {1, 1}, {-1, 1}, {1, -1},   // diagonals
}};

void check_dims(int width, int height) {
  if (width < 1 || height < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "raster dimensions must be at least 1x1, got " +
                    std::to_string(width) + "x" + std::to_string(height));
  }
}

}  // namespace

std::span<const PixelCoord> neighbor_offsets(Connectivity connectivity) noexcept {
  const std::span<const PixelCoord> all(kOffsets);
  return connectivity == Connectivity::kFour ? all.first(4) : all;
}

Raster::Raster(int width, int height, Pixel fill)
    : width_(width), height_(height) {
  check_dims(width, height);
  pixels_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

Raster::Raster(int width, int height, std::vector<Pixel> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_dims(width, height);
  if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw Error(ErrorCode::kInvalidArgument,
                "pixel buffer holds " + std::to_string(pixels_.size()) +
                    " values, expected " + std::to_string(width) + "x" +
                    std::to_string(height));
  }
}

Pixel Raster::at(int row, int col) const {
  if (!contains({row, col})) {
    throw Error(ErrorCode::kOutOfBounds,
                "pixel (" + std::to_string(row) + ", " + std::to_string(col) +
                    ") outside " + std::to_string(width_) + "x" +
                    std::to_string(height_) + " raster");
  }
  return (*this)(row, col);
}

void Palette::validate() const {
  const std::array<Pixel, 4> distinct = {background, boundary, exterior_label,
                                         interior_label};
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    for (std::size_t j = i + 1; j < distinct.size(); ++j) {
      if (distinct[i] == distinct[j]) {
        throw Error(ErrorCode::kInvalidPalette,
                    "background, boundary, exterior and interior label colours "
                    "must be pairwise distinct");
      }
    }
  }
  if (mask == background || mask == exterior_label || mask == interior_label) {
    throw Error(ErrorCode::kInvalidPalette,
                "mask colour must differ from background and label colours");
  }
}

Raster pad(const Raster& img, int margin, Pixel color) {
  if (margin < 1) {
    throw Error(ErrorCode::kInvalidArgument, "pad margin must be >= 1");
  }
  Raster out(img.width() + 2 * margin, img.height() + 2 * margin, color);
  for (int r = 0; r < img.height(); ++r) {
    const auto src = img.row(r);
    std::copy(src.begin(), src.end(), out.row(r + margin).begin() + margin);
  }
  return out;
}

Raster crop(const Raster& img, int margin) {
  if (margin < 0 || img.width() <= 2 * margin || img.height() <= 2 * margin) {
    throw Error(ErrorCode::kDimensionTooSmall,
                "cannot crop " + std::to_string(margin) + " pixels from a " +
                    std::to_string(img.width()) + "x" +
                    std::to_string(img.height()) + " raster");
  }
  Raster out(img.width() - 2 * margin, img.height() - 2 * margin);
  for (int r = 0; r < out.height(); ++r) {
    const auto src = img.row(r + margin).subspan(margin, out.width());
    std::copy(src.begin(), src.end(), out.row(r).begin());
  }
  return out;
}

void relabel_in_place(Raster& img, const ColorMapping& mapping) {
  if (mapping.empty()) return;
  std::array<Pixel, 256> lut{};
  std::array<bool, 256> seen{};
  for (int v = 0; v < 256; ++v) lut[v] = static_cast<Pixel>(v);
  for (const auto& [from, to] : mapping) {
    if (seen[from]) {
      throw Error(ErrorCode::kDuplicateMapping,
                  "colour " + std::to_string(from) + " mapped more than once");
    }
    seen[from] = true;
    lut[from] = to;
  }
  for (auto& px : img.pixels()) px = lut[px];
}

Raster relabel(const Raster& img, const ColorMapping& mapping) {
  Raster out = img;
  relabel_in_place(out, mapping);
  return out;
}

}  // namespace scaff

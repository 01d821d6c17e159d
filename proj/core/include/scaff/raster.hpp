#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace scaff {

using Pixel = std::uint8_t;

/// Row/column position of a pixel. `row` indexes height, `col` indexes width.
struct PixelCoord {
  int row = 0;
  int col = 0;

  friend bool operator==(const PixelCoord&, const PixelCoord&) = default;
};

enum class Connectivity { kFour, kEight };

/// Neighbour offsets for a connectivity. The first four entries are always the
/// 4-neighbourhood, so the 8-neighbourhood is a strict extension of it.
std::span<const PixelCoord> neighbor_offsets(Connectivity connectivity) noexcept;

/// An 8-bit grayscale image stored row-major.
///
/// Dimensions are at least 1x1. Pixels are addressed as (row, col) with
/// 0 <= row < height() and 0 <= col < width().
class Raster {
 public:
  /// Creates a width x height raster filled with `fill`. Throws
  /// ErrorCode::kInvalidArgument for a zero dimension.
  Raster(int width, int height, Pixel fill = 0);

  /// Adopts `pixels`, whose length must be exactly width * height.
  Raster(int width, int height, std::vector<Pixel> pixels);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  bool contains(PixelCoord p) const noexcept {
    return p.row >= 0 && p.row < height_ && p.col >= 0 && p.col < width_;
  }

  Pixel operator()(int row, int col) const noexcept {
    return pixels_[index(row, col)];
  }
  Pixel& operator()(int row, int col) noexcept {
    return pixels_[index(row, col)];
  }
  Pixel operator[](PixelCoord p) const noexcept { return (*this)(p.row, p.col); }
  Pixel& operator[](PixelCoord p) noexcept { return (*this)(p.row, p.col); }

  /// Bounds-checked access; throws ErrorCode::kOutOfBounds.
  Pixel at(int row, int col) const;

  std::span<const Pixel> pixels() const noexcept { return pixels_; }
  std::span<Pixel> pixels() noexcept { return pixels_; }

  std::span<const Pixel> row(int r) const noexcept {
    return std::span<const Pixel>(pixels_).subspan(index(r, 0), width_);
  }
  std::span<Pixel> row(int r) noexcept {
    return std::span<Pixel>(pixels_).subspan(index(r, 0), width_);
  }

  friend bool operator==(const Raster&, const Raster&) = default;

 private:
  std::size_t index(int row, int col) const noexcept {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(col);
  }

  int width_;
  int height_;
  std::vector<Pixel> pixels_;
};

/// The semantic colours used while filling. Defaults are 0 / 255 / 80 / 128 /
/// 255; mask may coincide with boundary so that outputs compare directly
/// against binary ground-truth masks.
struct Palette {
  Pixel background = 0;
  Pixel boundary = 255;
  Pixel exterior_label = 80;
  Pixel interior_label = 128;
  Pixel mask = 255;

  /// Throws ErrorCode::kInvalidPalette unless background, boundary and both
  /// labels are pairwise distinct and mask differs from background and labels.
  void validate() const;

  friend bool operator==(const Palette&, const Palette&) = default;
};

/// Returns a copy surrounded by a frame of `margin` pixels of `color`.
Raster pad(const Raster& img, int margin, Pixel color);

/// Inverse of pad: drops `margin` pixels from every side.
Raster crop(const Raster& img, int margin);

using ColorMapping = std::vector<std::pair<Pixel, Pixel>>;

/// Applies every from->to pair at once; a pixel is rewritten at most once, so
/// {a->b, b->a} swaps the two colours. Throws ErrorCode::kDuplicateMapping if
/// a source colour repeats.
Raster relabel(const Raster& img, const ColorMapping& mapping);

/// In-place variant of relabel for exclusively owned working images.
void relabel_in_place(Raster& img, const ColorMapping& mapping);

}  // namespace scaff

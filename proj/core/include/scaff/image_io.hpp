#pragma once

#include <filesystem>
#include <optional>

#include "scaff/fill.hpp"
#include "scaff/raster.hpp"

namespace scaff {

/// How input images are turned into boundary images.
struct FillConfig {
  FillAlgorithm algorithm = FillAlgorithm::kScaff;
  Palette palette;
  /// Pixels >= threshold become boundary, the rest background.
  std::optional<Pixel> threshold;
  /// Reject anything but background/boundary values. Excludes `threshold`.
  bool strict = true;

  /// Throws ErrorCode::kInvalidArgument if strict and threshold are both set,
  /// ErrorCode::kInvalidPalette for a bad palette.
  void validate() const;
};

/// Reads an 8-bit grayscale PNG, or a PGM (P2 or P5, maxval <= 255), chosen by
/// file signature. No value checks are applied.
///
/// Throws ErrorCode::kIo if the file cannot be read and
/// ErrorCode::kUnsupportedFormat for other formats, colour or 16-bit data.
Raster read_grayscale(const std::filesystem::path& path);

/// read_grayscale followed by strict validation or thresholding per `config`.
Raster decode_image(const std::filesystem::path& path, const FillConfig& config);

/// Binarizes in place: >= threshold -> palette.boundary, else palette.background.
void binarize(Raster& img, Pixel threshold, const Palette& palette);

/// Writes a lossless 8-bit grayscale image: P5 PGM for a `.pgm` extension,
/// PNG otherwise. Output bytes depend only on the raster. Throws
/// ErrorCode::kIo when the file cannot be written.
void encode_image(const Raster& img, const std::filesystem::path& path);

}  // namespace scaff

#pragma once

#include <optional>
#include <string_view>

#include "scaff/raster.hpp"

namespace scaff {

enum class FillAlgorithm {
  kEfci,   ///< exterior fill followed by colour inversion; ignores holes
  kScaff,  ///< scan-flood fill; alternates labels across boundary runs
};

std::string_view to_string(FillAlgorithm algorithm) noexcept;

/// Parses "efci" or "scaff" (case-sensitive).
std::optional<FillAlgorithm> parse_fill_algorithm(std::string_view name) noexcept;

/// Throws ErrorCode::kStrayValue if `img` holds anything besides
/// palette.background and palette.boundary.
void validate_boundary_image(const Raster& img, const Palette& palette);

/// Exterior-Fill and Colour Inversion.
///
/// Pads by one background pixel, floods the exterior from the origin with the
/// exterior label, crops, then maps background to mask and exterior label to
/// background. Every enclosed region becomes mask, including holes.
Raster efci(const Raster& img, const Palette& palette = {});

/// Looks left along the row from `pos` past boundary pixels and returns the
/// first label found (exterior or interior).
///
/// Only valid during the main scan of scaff on a padded image, where every
/// pixel before `pos` in row-major order is already labelled. Throws
/// ErrorCode::kInvariantViolation if the scan leaves the row or stops on a
/// pixel that is neither label.
Pixel backward_scan(const Raster& padded, PixelCoord pos, const Palette& palette);

/// Scan-flood Fill.
///
/// After the exterior flood, a row-major scan seeds a 4-connected flood at
/// every remaining background pixel, using the label opposite to the one
/// backward_scan finds. Regions separated from the exterior by an odd number
/// of boundary runs become mask, even ones background.
Raster scaff(const Raster& img, const Palette& palette = {});

Raster fill(FillAlgorithm algorithm, const Raster& img, const Palette& palette = {});

}  // namespace scaff

#pragma once

#include <cstddef>

#include "scaff/raster.hpp"

namespace scaff {

/// Recolours the connected component of the seed's colour with `new_color`.
///
/// Non-recursive scanline fill: each popped seed is widened to a maximal
/// horizontal span, and one seed per run of target-coloured pixels is pushed
/// for the rows above and below (widened by one column for kEight).
///
/// Returns the number of pixels recoloured. Throws ErrorCode::kOutOfBounds for
/// a seed outside the raster and ErrorCode::kSeedAlreadyNewColor when the seed
/// already carries `new_color`.
std::size_t flood_fill(Raster& img, PixelCoord seed, Pixel new_color,
                       Connectivity connectivity = Connectivity::kFour);

/// Pixel-by-pixel depth-first fill with the same contract as flood_fill.
/// Kept as a reference to check the scanline version against.
std::size_t flood_fill_oracle(Raster& img, PixelCoord seed, Pixel new_color,
                              Connectivity connectivity = Connectivity::kFour);

}  // namespace scaff

#pragma once

#include <cstdint>

#include "scaff/raster.hpp"

namespace scaff {

/// One scenario of the (multiple, border, holes) taxonomy. Case ids run 1..8
/// with id = 1 + 4*multiple + 2*border + holes.
struct CaseDescriptor {
  bool multiple = false;  ///< more than one object
  bool border = false;    ///< some boundary reaches the image border
  bool holes = false;     ///< some object encloses a hole
  int case_id = 1;

  /// Throws ErrorCode::kInvalidArgument unless 1 <= id <= 8.
  static CaseDescriptor from_id(int id);
  static CaseDescriptor from_flags(bool multiple, bool border, bool holes) noexcept;

  friend bool operator==(const CaseDescriptor&, const CaseDescriptor&) = default;
};

struct GeneratedCase {
  CaseDescriptor descriptor;
  Raster boundary_image;     ///< palette.background / palette.boundary only
  Raster ground_truth_mask;  ///< palette.background / palette.mask only
  int size = 0;
};

inline constexpr int kMinCaseSize = 32;

/// Draws a size x size instance of a scenario.
///
/// Objects are smooth low-order blobs (and disk holes) placed parametrically
/// from a seeded generator, so the ground-truth mask is exact by
/// construction. The boundary image is the mask's 4-neighbour boundary,
/// thickened inwards to `boundary_thickness` pixels; it always lies inside
/// the mask.
///
/// Throws ErrorCode::kSizeTooSmall if size < kMinCaseSize or if the boundary
/// is too thick for the size (thickness * 32 > size), and
/// ErrorCode::kInvalidArgument for a bad case id or thickness < 1.
GeneratedCase generate_case(int case_id, int size, int boundary_thickness = 1,
                            std::uint64_t seed = 1, const Palette& palette = {});

/// Square-element dilation: a pixel becomes `foreground` iff some foreground
/// pixel lies within Chebyshev distance `radius`. Other pixels are kept.
Raster dilate(const Raster& img, int radius, Pixel foreground);

/// Marks mask pixels that have a 4-neighbour outside the mask (pixels beyond
/// the image edge count as outside) with palette.boundary; everything else
/// becomes palette.background. Throws ErrorCode::kStrayValue if `mask` holds
/// values other than palette.background and palette.mask.
Raster extract_boundary(const Raster& mask, const Palette& palette = {});

}  // namespace scaff

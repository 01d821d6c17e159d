#pragma once

#include <cstdint>

#include "scaff/raster.hpp"

namespace scaff {

struct ConfusionCounts {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;

  std::uint64_t total() const noexcept { return tp + fp + fn + tn; }
  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

struct MetricReport {
  ConfusionCounts counts;
  double f1 = 1.0;
  double mae = 0.0;
};

/// Per-pixel confusion counts; a pixel is positive when it equals `positive`.
/// Throws ErrorCode::kDimensionMismatch when the rasters differ in size.
ConfusionCounts confusion(const Raster& pred, const Raster& gt, Pixel positive);

/// 2TP / (2TP + FP + FN), or 1.0 when both masks are empty.
double f1_score(const ConfusionCounts& counts) noexcept;
double f1_score(const Raster& pred, const Raster& gt, Pixel positive);

/// Mean of |pred - gt| / 255 over all pixels.
double mae(const Raster& pred, const Raster& gt);

MetricReport evaluate(const Raster& pred, const Raster& gt, Pixel positive);

}  // namespace scaff

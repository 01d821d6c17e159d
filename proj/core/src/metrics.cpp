#include "scaff/metrics.hpp"

#include <cstdlib>
#include <string>

#include "scaff/error.hpp"

namespace scaff {
namespace {

void check_same_dims(const Raster& pred, const Raster& gt) {
  if (pred.width() != gt.width() || pred.height() != gt.height()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "prediction is " + std::to_string(pred.width()) + "x" +
                    std::to_string(pred.height()) + " but ground truth is " +
                    std::to_string(gt.width()) + "x" + std::to_string(gt.height()));
  }
}

}  // namespace

ConfusionCounts confusion(const Raster& pred, const Raster& gt, Pixel positive) {
  check_same_dims(pred, gt);
  ConfusionCounts counts;
  const auto p = pred.pixels();
  const auto g = gt.pixels();
  for (std::size_t i = 0; i < p.size(); ++i) {
    const bool predicted = p[i] == positive;
    const bool actual = g[i] == positive;
    if (predicted && actual) {
      ++counts.tp;
    } else if (predicted) {
      ++counts.fp;
    } else if (actual) {
      ++counts.fn;
    } else {
      ++counts.tn;
    }
  }
  return counts;
}

double f1_score(const ConfusionCounts& counts) noexcept {
  const std::uint64_t denom = 2 * counts.tp + counts.fp + counts.fn;
  if (denom == 0) return 1.0;
  return static_cast<double>(2 * counts.tp) / static_cast<double>(denom);
}

double f1_score(const Raster& pred, const Raster& gt, Pixel positive) {
  return f1_score(confusion(pred, gt, positive));
}

double mae(const Raster& pred, const Raster& gt) {
  check_same_dims(pred, gt);
  const auto p = pred.pixels();
  const auto g = gt.pixels();
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    sum += static_cast<std::uint64_t>(std::abs(int{p[i]} - int{g[i]}));
  }
  return static_cast<double>(sum) / (255.0 * static_cast<double>(p.size()));
}

MetricReport evaluate(const Raster& pred, const Raster& gt, Pixel positive) {
  MetricReport report;
  report.counts = confusion(pred, gt, positive);
  report.f1 = f1_score(report.counts);
  report.mae = mae(pred, gt);
  return report;
}

}  // namespace scaff

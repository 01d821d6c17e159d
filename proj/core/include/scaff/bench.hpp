#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "scaff/fill.hpp"

namespace scaff {

/// One timed fill call.
struct BenchRecord {
  FillAlgorithm algorithm = FillAlgorithm::kScaff;
  int case_id = 1;
  int size = 0;                 ///< edge length
  std::uint64_t pixel_count = 0;  ///< size * size
  int repeat_index = 0;
  double seconds = 0.0;
};

struct FitPoint {
  double pixels = 0.0;
  double seconds = 0.0;
};

struct LinearFit {
  double slope = 0.0;      ///< seconds per pixel
  double intercept = 0.0;  ///< seconds
  double adj_r2 = 1.0;
};

struct BenchOptions {
  std::vector<int> sizes;
  std::vector<int> cases = {1, 2, 3, 4, 5, 6, 7, 8};
  int repeats = 3;
  std::vector<FillAlgorithm> algorithms = {FillAlgorithm::kEfci, FillAlgorithm::kScaff};
  int thickness = 1;
  std::uint64_t seed = 1;
};

/// Times every (size, algorithm, case, repeat) combination, single-threaded.
///
/// All cases are generated before timing starts, and one untimed warm-up call
/// per (algorithm, size) precedes the measurements. Each repeat pass walks
/// cases, then sizes, then algorithms, so records come out interleaved.
/// Errors from generation or filling propagate with the offending
/// combination prepended to the message.
std::vector<BenchRecord> run_bench(const BenchOptions& options);

/// Mean seconds per distinct size for one algorithm, ordered by size.
std::vector<FitPoint> mean_points(std::span<const BenchRecord> records,
                                  FillAlgorithm algorithm);

/// Ordinary least squares of seconds on pixels, with
/// adj_r2 = 1 - (1 - R^2)(n - 1)/(n - 2).
///
/// Needs at least three points (ErrorCode::kInsufficientPoints) and at least
/// two distinct pixel counts (ErrorCode::kDegenerateFit). With zero residual
/// variance in y the fit is exact and adj_r2 is reported as 1.
LinearFit linear_fit(std::span<const FitPoint> points);

/// CSV with header `algorithm,case_id,size,pixel_count,repeat,seconds`.
void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records);

/// JSON object `{algorithm: {slope, intercept, adj_r2}}` for every algorithm
/// present in `records`. An algorithm with fewer than three sizes maps to null.
void write_bench_json(std::ostream& out, std::span<const BenchRecord> records);

}  // namespace scaff

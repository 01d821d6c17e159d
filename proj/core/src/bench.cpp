#include "scaff/bench.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <string>

#include <json.hpp>

#include "scaff/casegen.hpp"
#include "scaff/error.hpp"

namespace scaff {
namespace {

using Clock = std::chrono::steady_clock;

double time_fill(FillAlgorithm algorithm, const Raster& img) {
  const auto start = Clock::now();
  const Raster out = fill(algorithm, img);
  const auto stop = Clock::now();
  // Keep the result observable so the call cannot be elided.
  [[maybe_unused]] static volatile Pixel sink;
  sink = out.pixels()[0];
  const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
  return static_cast<double>(std::max<std::int64_t>(ns, 1)) * 1e-9;
}

std::string context(FillAlgorithm algorithm, int size, int case_id) {
  return std::string(to_string(algorithm)) + " size " + std::to_string(size) + " case " +
         std::to_string(case_id) + ": ";
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchOptions& options) {
  if (options.sizes.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "benchmark needs at least one size");
  }
  if (options.cases.empty() || options.algorithms.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "benchmark needs cases and algorithms");
  }
  if (options.repeats < 1) {
    throw Error(ErrorCode::kInvalidArgument, "benchmark repeats must be >= 1");
  }

  // All inputs are generated up front so that timing passes can interleave
  // sizes and algorithms; slow host phases then spread evenly over the fit
  // instead of landing on one size.
  std::vector<std::vector<Raster>> inputs(options.sizes.size());
  for (std::size_t si = 0; si < options.sizes.size(); ++si) {
    const int size = options.sizes[si];
    inputs[si].reserve(options.cases.size());
    for (const int case_id : options.cases) {
      try {
        inputs[si].push_back(
            generate_case(case_id, size, options.thickness, options.seed).boundary_image);
      } catch (const Error& e) {
        throw Error(e.code(), "generating size " + std::to_string(size) + " case " +
                                  std::to_string(case_id) + ": " + e.what());
      }
    }
  }

  const auto timed = [&](FillAlgorithm algorithm, std::size_t si, std::size_t ci) {
    try {
      return time_fill(algorithm, inputs[si][ci]);
    } catch (const Error& e) {
      throw Error(e.code(), context(algorithm, options.sizes[si], options.cases[ci]) + e.what());
    }
  };

  for (std::size_t si = 0; si < options.sizes.size(); ++si) {
    for (const FillAlgorithm algorithm : options.algorithms) timed(algorithm, si, 0);  // warm-up
  }

  std::vector<BenchRecord> records;
  records.reserve(options.sizes.size() * options.cases.size() * options.algorithms.size() *
                  static_cast<std::size_t>(options.repeats));
  for (int rep = 0; rep < options.repeats; ++rep) {
    for (std::size_t ci = 0; ci < options.cases.size(); ++ci) {
      for (std::size_t si = 0; si < options.sizes.size(); ++si) {
        const int size = options.sizes[si];
        for (const FillAlgorithm algorithm : options.algorithms) {
          records.push_back({algorithm, options.cases[ci], size,
                             static_cast<std::uint64_t>(size) * static_cast<std::uint64_t>(size),
                             rep, timed(algorithm, si, ci)});
        }
      }
    }
  }
  return records;
}

std::vector<FitPoint> mean_points(std::span<const BenchRecord> records,
                                  FillAlgorithm algorithm) {
  std::map<std::uint64_t, std::pair<double, int>> by_pixels;
  for (const BenchRecord& r : records) {
    if (r.algorithm != algorithm) continue;
    auto& [sum, n] = by_pixels[r.pixel_count];
    sum += r.seconds;
    ++n;
  }
  std::vector<FitPoint> points;
  points.reserve(by_pixels.size());
  for (const auto& [pixels, acc] : by_pixels) {
    points.push_back({static_cast<double>(pixels), acc.first / acc.second});
  }
  return points;
}

LinearFit linear_fit(std::span<const FitPoint> points) {
  const std::size_t n = points.size();
  if (n < 3) {
    throw Error(ErrorCode::kInsufficientPoints,
                "linear fit needs at least 3 points, got " + std::to_string(n));
  }
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const FitPoint& p : points) {
    mean_x += p.pixels;
    mean_y += p.seconds;
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (const FitPoint& p : points) {
    const double dx = p.pixels - mean_x;
    const double dy = p.seconds - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) {
    throw Error(ErrorCode::kDegenerateFit, "linear fit needs distinct pixel counts");
  }

  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  if (syy == 0.0) return fit;  // constant y: exact fit

  double sse = 0.0;
  for (const FitPoint& p : points) {
    const double residual = p.seconds - (fit.intercept + fit.slope * p.pixels);
    sse += residual * residual;
  }
  const double r2 = 1.0 - sse / syy;
  const double dn = static_cast<double>(n);
  fit.adj_r2 = 1.0 - (1.0 - r2) * (dn - 1.0) / (dn - 2.0);
  return fit;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "algorithm,case_id,size,pixel_count,repeat,seconds\n";
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::fixed << std::setprecision(9);
  for (const BenchRecord& r : records) {
    out << to_string(r.algorithm) << ',' << r.case_id << ',' << r.size << ','
        << r.pixel_count << ',' << r.repeat_index << ',' << r.seconds << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

void write_bench_json(std::ostream& out, std::span<const BenchRecord> records) {
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  for (const FillAlgorithm algorithm : {FillAlgorithm::kEfci, FillAlgorithm::kScaff}) {
    const auto points = mean_points(records, algorithm);
    if (points.empty()) continue;
    const std::string key(to_string(algorithm));
    if (points.size() < 3) {
      summary[key] = nullptr;
      continue;
    }
    const LinearFit fit = linear_fit(points);
    summary[key] = {{"slope", fit.slope}, {"intercept", fit.intercept}, {"adj_r2", fit.adj_r2}};
  }
  out << summary.dump(2) << '\n';
}

}  // namespace scaff

#include <gtest/gtest.h>

#include <array>
#include <sstream>

#include <json.hpp>

#include <scaff/bench.hpp>
#include <scaff/error.hpp>

namespace scaff {
namespace {

TEST(LinearFit, CollinearPointsAreExact) {
  const std::vector<FitPoint> pts = {{1, 5}, {2, 7}, {4, 11}, {10, 23}};
  const LinearFit fit = linear_fit(pts);
  EXPECT_NEAR(fit.slope, 2.0, 1e-12);
  EXPECT_NEAR(fit.intercept, 3.0, 1e-12);
  EXPECT_NEAR(fit.adj_r2, 1.0, 1e-12);
}

TEST(LinearFit, ConstantY) {
  const std::vector<FitPoint> pts = {{1, 0.5}, {2, 0.5}, {3, 0.5}};
  const LinearFit fit = linear_fit(pts);
  EXPECT_EQ(fit.slope, 0.0);
  EXPECT_EQ(fit.intercept, 0.5);
}

TEST(LinearFit, AdjustedRSquaredFormula) {
  // y = x plus alternating noise; R^2 computed by hand from the residuals.
  const std::vector<FitPoint> pts = {{0, 0}, {1, 2}, {2, 1}, {3, 4}, {4, 3}};
  const LinearFit fit = linear_fit(pts);
  // mean x 2, mean y 2, sxx 10, sxy 8, syy 10 -> slope 0.8, intercept 0.4,
  // SSE = syy - sxy^2/sxx = 3.6, R^2 = 0.64, adj = 1 - 0.36 * 4 / 3 = 0.52.
  EXPECT_NEAR(fit.slope, 0.8, 1e-12);
  EXPECT_NEAR(fit.intercept, 0.4, 1e-12);
  EXPECT_NEAR(fit.adj_r2, 0.52, 1e-12);
}

TEST(LinearFit, Errors) {
  const std::vector<FitPoint> two = {{1, 1}, {2, 2}};
  try {
    linear_fit(two);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInsufficientPoints);
  }
  const std::vector<FitPoint> same_x = {{5, 1}, {5, 2}, {5, 3}};
  try {
    linear_fit(same_x);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateFit);
  }
}

// Published timings: edge lengths 200..2000 step 200, seconds per image.
constexpr std::array<double, 10> kEfciSeconds = {0.07766529, 0.26739229, 0.58787846, 1.07662390,
                                                 1.60052500, 2.32550920, 3.16818610, 4.44347420,
                                                 5.45135353, 6.62144210};
constexpr std::array<double, 10> kScaffSeconds = {0.1186108, 0.4606119, 1.0168558, 1.7586195,
                                                  2.7622317, 4.1238358, 5.6745079, 7.4507671,
                                                  9.4607772, 11.7155405};

std::vector<FitPoint> fixture(const std::array<double, 10>& seconds) {
  std::vector<FitPoint> pts;
  for (int i = 0; i < 10; ++i) {
    const double edge = 200.0 * (i + 1);
    pts.push_back({edge * edge, seconds[i]});
  }
  return pts;
}

TEST(LinearFit, PublishedTimingFixture) {
  // Reference values from an independent OLS (statsmodels) run on the same data.
  const LinearFit efci = linear_fit(fixture(kEfciSeconds));
  EXPECT_NEAR(efci.slope, 1.675350756683792e-06, 1e-15);
  EXPECT_NEAR(efci.intercept, -0.01803515829304092, 1e-9);
  EXPECT_NEAR(efci.adj_r2, 0.998703793111335, 1e-9);
  EXPECT_GT(efci.adj_r2, 0.99);

  const LinearFit scaff = linear_fit(fixture(kScaffSeconds));
  EXPECT_NEAR(scaff.slope, 2.936731715665287e-06, 1e-15);
  EXPECT_NEAR(scaff.intercept, -0.06833102212454234, 1e-9);
  EXPECT_NEAR(scaff.adj_r2, 0.9997966695957972, 1e-9);
}

TEST(RunBench, RecordsEveryCombination) {
  BenchOptions opts;
  opts.sizes = {64, 96, 128};
  opts.cases = {1, 6};
  opts.repeats = 2;
  const auto records = run_bench(opts);
  ASSERT_EQ(records.size(), 3u * 2u * 2u * 2u);
  for (const auto& r : records) {
    EXPECT_EQ(r.pixel_count, static_cast<std::uint64_t>(r.size) * r.size);
    EXPECT_GT(r.seconds, 0.0);
  }
  const auto points = mean_points(records, FillAlgorithm::kScaff);
  ASSERT_EQ(points.size(), 3u);
  EXPECT_EQ(points[0].pixels, 64.0 * 64.0);
  EXPECT_EQ(points[2].pixels, 128.0 * 128.0);
}

TEST(RunBench, PreconditionsAndContext) {
  BenchOptions opts;
  EXPECT_THROW(run_bench(opts), Error);  // no sizes
  opts.sizes = {64};
  opts.repeats = 0;
  EXPECT_THROW(run_bench(opts), Error);
  opts.repeats = 1;
  opts.sizes = {16};
  try {
    run_bench(opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeTooSmall);
    EXPECT_NE(std::string(e.what()).find("size 16"), std::string::npos);
  }
}

TEST(MeanPoints, AveragesRepeats) {
  const std::vector<BenchRecord> records = {
      {FillAlgorithm::kEfci, 1, 10, 100, 0, 1.0},
      {FillAlgorithm::kEfci, 1, 10, 100, 1, 2.0},
      {FillAlgorithm::kEfci, 1, 10, 100, 2, 6.0},
      {FillAlgorithm::kScaff, 1, 10, 100, 0, 50.0},
  };
  const auto pts = mean_points(records, FillAlgorithm::kEfci);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_DOUBLE_EQ(pts[0].seconds, 3.0);
}

TEST(BenchOutput, CsvAndJsonSchemas) {
  std::vector<BenchRecord> records;
  for (int size : {10, 20, 30}) {
    const auto px = static_cast<std::uint64_t>(size) * size;
    records.push_back({FillAlgorithm::kEfci, 2, size, px, 0, 1e-6 * px});
    records.push_back({FillAlgorithm::kScaff, 2, size, px, 0, 2e-6 * px + 1e-3});
  }
  std::ostringstream csv;
  write_bench_csv(csv, records);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "algorithm,case_id,size,pixel_count,repeat,seconds");
  std::string first;
  std::getline(lines, first);
  EXPECT_EQ(first, "efci,2,10,100,0,0.000100000");

  std::ostringstream js;
  write_bench_json(js, records);
  const auto parsed = nlohmann::json::parse(js.str());
  ASSERT_TRUE(parsed.contains("efci"));
  ASSERT_TRUE(parsed.contains("scaff"));
  EXPECT_NEAR(parsed["efci"]["slope"].get<double>(), 1e-6, 1e-15);
  EXPECT_NEAR(parsed["scaff"]["intercept"].get<double>(), 1e-3, 1e-12);
  EXPECT_NEAR(parsed["scaff"]["adj_r2"].get<double>(), 1.0, 1e-9);

  std::ostringstream short_js;
  write_bench_json(short_js, std::span(records).first(2));
  EXPECT_TRUE(nlohmann::json::parse(short_js.str())["efci"].is_null());
}

}  // namespace
}  // namespace scaff

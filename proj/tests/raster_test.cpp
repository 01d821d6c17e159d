#include <gtest/gtest.h>

#include <random>
#include <set>

#include <scaff/error.hpp>
#include <scaff/raster.hpp>

#include "oracles.hpp"

namespace scaff {
namespace {

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected scaff::Error";
  return ErrorCode::kIo;
}

TEST(Raster, RejectsEmptyDimensionsAndShortBuffers) {
  EXPECT_EQ(code_of([] { Raster(0, 3); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { Raster(2, 2, std::vector<Pixel>(3)); }), ErrorCode::kInvalidArgument);
}

TEST(Raster, IndexesRowFirst) {
  Raster img(3, 2);  // width 3, height 2
  img(1, 2) = 7;
  EXPECT_EQ(img.pixels()[5], 7);
  EXPECT_TRUE(img.contains({1, 2}));
  EXPECT_FALSE(img.contains({2, 1}));
  EXPECT_EQ(code_of([&] { (void)img.at(2, 0); }), ErrorCode::kOutOfBounds);
}

TEST(Connectivity, OffsetSets) {
  const auto four = neighbor_offsets(Connectivity::kFour);
  const auto eight = neighbor_offsets(Connectivity::kEight);
  ASSERT_EQ(four.size(), 4u);
  ASSERT_EQ(eight.size(), 8u);
  const std::set<std::pair<int, int>> expected_four = {{0, -1}, {0, 1}, {-1, 0}, {1, 0}};
  std::set<std::pair<int, int>> got_four;
  for (auto p : four) got_four.insert({p.row, p.col});
  EXPECT_EQ(got_four, expected_four);

  std::set<std::pair<int, int>> got_eight;
  for (auto p : eight) got_eight.insert({p.row, p.col});
  EXPECT_EQ(got_eight.size(), 8u);
  for (auto p : expected_four) EXPECT_TRUE(got_eight.count(p));
  for (auto p : got_eight) {
    EXPECT_LE(std::abs(p.first), 1);
    EXPECT_LE(std::abs(p.second), 1);
  }
}

TEST(Palette, DefaultsAndValidation) {
  const Palette p;
  EXPECT_EQ(p.background, 0);
  EXPECT_EQ(p.boundary, 255);
  EXPECT_EQ(p.exterior_label, 80);
  EXPECT_EQ(p.interior_label, 128);
  EXPECT_EQ(p.mask, 255);
  EXPECT_NO_THROW(p.validate());

  Palette clash = p;
  clash.interior_label = 80;
  EXPECT_EQ(code_of([&] { clash.validate(); }), ErrorCode::kInvalidPalette);

  Palette bad_mask = p;
  bad_mask.mask = 0;
  EXPECT_EQ(code_of([&] { bad_mask.validate(); }), ErrorCode::kInvalidPalette);

  Palette distinct_mask = p;
  distinct_mask.mask = 200;
  EXPECT_NO_THROW(distinct_mask.validate());
}

TEST(Pad, SinglePixelFrame) {
  const Raster one(1, 1, 255);
  const Raster padded = pad(one, 1, 0);
  ASSERT_EQ(padded.width(), 3);
  ASSERT_EQ(padded.height(), 3);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) EXPECT_EQ(padded(r, c), (r == 1 && c == 1) ? 255 : 0);
  }
}

TEST(Pad, DimensionArithmetic) {
  const Raster padded = pad(Raster(200, 200), 1, 0);
  EXPECT_EQ(padded.width(), 202);
  EXPECT_EQ(padded.height(), 202);
  const Raster cropped = crop(padded, 1);
  EXPECT_EQ(cropped.width(), 200);
  EXPECT_EQ(cropped.height(), 200);
  EXPECT_EQ(code_of([] { pad(Raster(2, 2), 0, 0); }), ErrorCode::kInvalidArgument);
}

TEST(Crop, SmallestAndTooSmall) {
  EXPECT_EQ(crop(Raster(3, 3, 0), 1), Raster(1, 1, 0));
  EXPECT_EQ(code_of([] { crop(Raster(2, 5), 1); }), ErrorCode::kDimensionTooSmall);
  EXPECT_EQ(code_of([] { crop(Raster(5, 4), 2); }), ErrorCode::kDimensionTooSmall);
}

TEST(PadCrop, RoundTripIsIdentity) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dim(1, 40);
  std::uniform_int_distribution<int> margin(1, 6);
  std::uniform_int_distribution<int> value(0, 255);
  for (int trial = 0; trial < 100; ++trial) {
    Raster img(dim(rng), dim(rng));
    for (auto& px : img.pixels()) px = static_cast<Pixel>(value(rng));
    const int m = margin(rng);
    const Pixel c = static_cast<Pixel>(value(rng));
    const Raster padded = pad(img, m, c);
    // Frame is uniformly c.
    for (int r = 0; r < padded.height(); ++r) {
      for (int col = 0; col < padded.width(); ++col) {
        const bool frame = r < m || col < m || r >= m + img.height() || col >= m + img.width();
        if (frame) ASSERT_EQ(padded(r, col), c);
      }
    }
    ASSERT_EQ(crop(padded, m), img);
  }
}

TEST(Relabel, InversionExample) {
  const Raster img(3, 1, std::vector<Pixel>{0, 80, 255});
  const Raster out = relabel(img, {{0, 255}, {80, 0}});
  EXPECT_EQ(out, Raster(3, 1, std::vector<Pixel>{255, 0, 255}));
}

TEST(Relabel, EmptyMappingIsIdentity) {
  const Raster img(3, 1, std::vector<Pixel>{4, 5, 6});
  EXPECT_EQ(relabel(img, {}), img);
}

TEST(Relabel, SwapIsSimultaneous) {
  const Raster img(4, 1, std::vector<Pixel>{1, 2, 2, 3});
  EXPECT_EQ(relabel(img, {{1, 2}, {2, 1}}), Raster(4, 1, std::vector<Pixel>{2, 1, 1, 3}));
}

TEST(Relabel, LeavesBoundaryPixelsOfLabelledRasterAlone) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick(0, 2);
  const Pixel values[] = {80, 128, 255};
  Raster img(30, 20);
  for (auto& px : img.pixels()) px = values[pick(rng)];
  const auto boundary_count = testing::count_value(img, 255);
  const Raster out = relabel(img, {{80, 0}, {128, 255}});
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (img.pixels()[i] == 255) EXPECT_EQ(out.pixels()[i], 255);
  }
  EXPECT_EQ(testing::count_value(out, 255),
            boundary_count + testing::count_value(img, 128));
}

TEST(Relabel, RejectsDuplicateSources) {
  EXPECT_EQ(code_of([] { relabel(Raster(1, 1), {{1, 2}, {1, 3}}); }),
            ErrorCode::kDuplicateMapping);
}

}  // namespace
}  // namespace scaff

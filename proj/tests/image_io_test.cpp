#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include <png.h>

#include <scaff/error.hpp>
#include <scaff/image_io.hpp>

#include "oracles.hpp"

namespace scaff {
namespace {

namespace fs = std::filesystem;

class ImageIo : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("scaff_io_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path path(const std::string& name) const { return dir_ / name; }

  void write_bytes(const fs::path& p, const std::string& bytes) const {
    std::ofstream out(p, std::ios::binary);
    out << bytes;
  }

  ErrorCode code_of(const auto& fn) const {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    ADD_FAILURE() << "expected scaff::Error";
    return ErrorCode::kInvalidArgument;
  }

  fs::path dir_;
};

// Writes a 16-bit grayscale PNG through libpng directly.
void write_png16(const fs::path& p) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  image.width = 2;
  image.height = 2;
  image.format = PNG_FORMAT_LINEAR_Y;
  const std::uint16_t data[4] = {0, 65535, 65535, 0};
  ASSERT_TRUE(png_image_write_to_file(&image, p.c_str(), 0, data, 0, nullptr));
}

TEST_F(ImageIo, RoundTripsRandomRasters) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> dim(1, 50);
  std::uniform_int_distribution<int> value(0, 255);
  for (int trial = 0; trial < 20; ++trial) {
    Raster img(dim(rng), dim(rng));
    for (auto& px : img.pixels()) px = static_cast<Pixel>(value(rng));
    for (const char* ext : {".png", ".pgm", ".PGM"}) {
      const fs::path p = path("img" + std::string(ext));
      encode_image(img, p);
      ASSERT_EQ(read_grayscale(p), img) << ext;
    }
  }
}

TEST_F(ImageIo, ExtensionSelectsFormat) {
  const Raster img(3, 2, 255);
  encode_image(img, path("a.pgm"));
  encode_image(img, path("a.png"));
  std::ifstream pgm(path("a.pgm"), std::ios::binary);
  std::string magic(2, '\0');
  pgm.read(magic.data(), 2);
  EXPECT_EQ(magic, "P5");
  std::ifstream png(path("a.png"), std::ios::binary);
  unsigned char sig[8];
  png.read(reinterpret_cast<char*>(sig), 8);
  EXPECT_EQ(png_sig_cmp(sig, 0, 8), 0);
}

TEST_F(ImageIo, StrictPgmLoadsVerbatim) {
  write_bytes(path("b.pgm"), std::string("P5\n# comment\n3 1\n255\n") + '\0' + '\xff' + '\0');
  const Raster img = decode_image(path("b.pgm"), FillConfig{});
  EXPECT_EQ(img, Raster(3, 1, std::vector<Pixel>{0, 255, 0}));
}

TEST_F(ImageIo, AsciiPgm) {
  write_bytes(path("c.pgm"), "P2\n2 2\n255\n0 255\n255 0\n");
  EXPECT_EQ(read_grayscale(path("c.pgm")), Raster(2, 2, std::vector<Pixel>{0, 255, 255, 0}));
}

TEST_F(ImageIo, StrictModeRejectsStrayValues) {
  write_bytes(path("d.pgm"), "P2\n2 1\n255\n0 7\n");
  EXPECT_EQ(code_of([&] { decode_image(path("d.pgm"), FillConfig{}); }), ErrorCode::kStrayValue);
}

TEST_F(ImageIo, ThresholdBinarizesAntiAliasedEdges) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> value(0, 255);
  Raster soft(40, 30);
  for (auto& px : soft.pixels()) px = static_cast<Pixel>(value(rng));
  encode_image(soft, path("soft.png"));

  FillConfig config;
  config.strict = false;
  config.threshold = 128;
  const Raster binary = decode_image(path("soft.png"), config);
  for (std::size_t i = 0; i < soft.size(); ++i) {
    ASSERT_EQ(binary.pixels()[i], soft.pixels()[i] >= 128 ? 255 : 0);
  }
}

TEST_F(ImageIo, RejectsUnsupportedInputs) {
  write_png16(path("deep.png"));
  EXPECT_EQ(code_of([&] { read_grayscale(path("deep.png")); }), ErrorCode::kUnsupportedFormat);

  write_bytes(path("wide.pgm"), "P5\n1 1\n65535\n\x01\x02");
  EXPECT_EQ(code_of([&] { read_grayscale(path("wide.pgm")); }), ErrorCode::kUnsupportedFormat);

  write_bytes(path("text.png"), "hello");
  EXPECT_EQ(code_of([&] { read_grayscale(path("text.png")); }), ErrorCode::kUnsupportedFormat);

  write_bytes(path("short.pgm"), "P5\n4 4\n255\nab");
  EXPECT_EQ(code_of([&] { read_grayscale(path("short.pgm")); }), ErrorCode::kUnsupportedFormat);

  png_image rgb{};
  rgb.version = PNG_IMAGE_VERSION;
  rgb.width = 1;
  rgb.height = 1;
  rgb.format = PNG_FORMAT_RGB;
  const unsigned char px[3] = {1, 2, 3};
  ASSERT_TRUE(png_image_write_to_file(&rgb, path("rgb.png").c_str(), 0, px, 0, nullptr));
  EXPECT_EQ(code_of([&] { read_grayscale(path("rgb.png")); }), ErrorCode::kUnsupportedFormat);
}

TEST_F(ImageIo, IoErrors) {
  EXPECT_EQ(code_of([&] { read_grayscale(path("missing.png")); }), ErrorCode::kIo);
  EXPECT_EQ(code_of([&] { encode_image(Raster(1, 1), path("no/such/dir/x.png")); }),
            ErrorCode::kIo);
  EXPECT_EQ(code_of([&] { encode_image(Raster(1, 1), path("no/such/dir/x.pgm")); }),
            ErrorCode::kIo);
}

TEST(FillConfig, StrictExcludesThreshold) {
  FillConfig config;
  config.threshold = 10;
  EXPECT_THROW(config.validate(), Error);
  config.strict = false;
  EXPECT_NO_THROW(config.validate());
}

}  // namespace
}  // namespace scaff

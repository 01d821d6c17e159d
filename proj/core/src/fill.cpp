#include "scaff/fill.hpp"

#include <string>

#include "scaff/error.hpp"
#include "scaff/flood_fill.hpp"

namespace scaff {
namespace {

constexpr int kPadMargin = 1;

void check_inputs(const Raster& img, const Palette& palette) {
  palette.validate();
  validate_boundary_image(img, palette);
}

std::string where(PixelCoord p) {
  return "(" + std::to_string(p.row) + ", " + std::to_string(p.col) + ")";
}

}  // namespace

std::string_view to_string(FillAlgorithm algorithm) noexcept {
  return algorithm == FillAlgorithm::kEfci ? "efci" : "scaff";
}

std::optional<FillAlgorithm> parse_fill_algorithm(std::string_view name) noexcept {
  if (name == "efci") return FillAlgorithm::kEfci;
  if (name == "scaff") return FillAlgorithm::kScaff;
  return std::nullopt;
}

void validate_boundary_image(const Raster& img, const Palette& palette) {
  for (int r = 0; r < img.height(); ++r) {
    const auto line = img.row(r);
    for (int c = 0; c < img.width(); ++c) {
      const Pixel v = line[c];
      if (v != palette.background && v != palette.boundary) {
        throw Error(ErrorCode::kStrayValue,
                    "pixel " + where({r, c}) + " has value " + std::to_string(v) +
                        "; expected background " +
                        std::to_string(palette.background) + " or boundary " +
                        std::to_string(palette.boundary));
      }
    }
  }
}

Raster efci(const Raster& img, const Palette& palette) {
  check_inputs(img, palette);
  Raster work = pad(img, kPadMargin, palette.background);
  flood_fill(work, {0, 0}, palette.exterior_label, Connectivity::kFour);
  Raster out = crop(work, kPadMargin);
  relabel_in_place(out, {{palette.background, palette.mask},
                         {palette.exterior_label, palette.background}});
  return out;
}

Pixel backward_scan(const Raster& padded, PixelCoord pos, const Palette& palette) {
  if (!padded.contains(pos)) {
    throw Error(ErrorCode::kOutOfBounds, "backward scan start " + where(pos) +
                                             " outside the image");
  }
  const auto line = padded.row(pos.row);
  int col = pos.col - 1;
  while (col >= 0 && line[col] == palette.boundary) --col;
  if (col < 0) {
    throw Error(ErrorCode::kInvariantViolation,
                "backward scan from " + where(pos) +
                    " left the row without finding a labelled pixel");
  }
  const Pixel found = line[col];
  if (found != palette.exterior_label && found != palette.interior_label) {
    throw Error(ErrorCode::kInvariantViolation,
                "backward scan from " + where(pos) + " stopped on value " +
                    std::to_string(found) + " at column " + std::to_string(col));
  }
  return found;
}

Raster scaff(const Raster& img, const Palette& palette) {
  check_inputs(img, palette);
  Raster work = pad(img, kPadMargin, palette.background);
  flood_fill(work, {0, 0}, palette.exterior_label, Connectivity::kFour);

  for (int r = 0; r < work.height(); ++r) {
    for (int c = 0; c < work.width(); ++c) {
      if (work(r, c) != palette.background) continue;
      const Pixel neighbour = backward_scan(work, {r, c}, palette);
      const Pixel label = neighbour == palette.exterior_label
                              ? palette.interior_label
                              : palette.exterior_label;
      flood_fill(work, {r, c}, label, Connectivity::kFour);
    }
  }

  Raster out = crop(work, kPadMargin);
  relabel_in_place(out, {{palette.exterior_label, palette.background},
                         {palette.interior_label, palette.mask}});
  return out;
}

Raster fill(FillAlgorithm algorithm, const Raster& img, const Palette& palette) {
  return algorithm == FillAlgorithm::kEfci ? efci(img, palette) : scaff(img, palette);
}

}  // namespace scaff

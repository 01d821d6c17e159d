#include "scaff/flood_fill.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "scaff/error.hpp"

namespace scaff {
namespace {

Pixel check_seed(const Raster& img, PixelCoord seed, Pixel new_color) {
  if (!img.contains(seed)) {
    throw Error(ErrorCode::kOutOfBounds,
                "flood fill seed (" + std::to_string(seed.row) + ", " +
                    std::to_string(seed.col) + ") outside " +
                    std::to_string(img.width()) + "x" +
                    std::to_string(img.height()) + " raster");
  }
  const Pixel target = img[seed];
  if (target == new_color) {
    throw Error(ErrorCode::kSeedAlreadyNewColor,
                "flood fill seed already has colour " + std::to_string(new_color));
  }
  return target;
}

}  // namespace

std::size_t flood_fill(Raster& img, PixelCoord seed, Pixel new_color,
                       Connectivity connectivity) {
  const Pixel target = check_seed(img, seed, new_color);
  const int width = img.width();
  const int height = img.height();
  const int reach = connectivity == Connectivity::kEight ? 1 : 0;

  std::size_t filled = 0;
  std::vector<PixelCoord> pending;
  pending.push_back(seed);

  while (!pending.empty()) {
    const PixelCoord p = pending.back();
    pending.pop_back();

    auto line = img.row(p.row);
    if (line[p.col] != target) continue;  // reached through another span

    int left = p.col;
    int right = p.col;
    while (left > 0 && line[left - 1] == target) --left;
    while (right + 1 < width && line[right + 1] == target) ++right;
    std::fill(line.begin() + left, line.begin() + right + 1, new_color);
    filled += static_cast<std::size_t>(right - left + 1);

    const int lo = std::max(0, left - reach);
    const int hi = std::min(width - 1, right + reach);
    for (const int next_row : {p.row - 1, p.row + 1}) {
      if (next_row < 0 || next_row >= height) continue;
      const auto next = img.row(next_row);
      bool in_run = false;
      for (int col = lo; col <= hi; ++col) {
        if (next[col] == target) {
          if (!in_run) pending.push_back({next_row, col});
          in_run = true;
        } else {
          in_run = false;
        }
      }
    }
  }
  return filled;
}

std::size_t flood_fill_oracle(Raster& img, PixelCoord seed, Pixel new_color,
                              Connectivity connectivity) {
  const Pixel target = check_seed(img, seed, new_color);
  const auto offsets = neighbor_offsets(connectivity);

  std::size_t filled = 0;
  std::vector<PixelCoord> stack;
  img[seed] = new_color;
  stack.push_back(seed);
  while (!stack.empty()) {
    const PixelCoord p = stack.back();
    stack.pop_back();
    ++filled;
    for (const PixelCoord d : offsets) {
      const PixelCoord q{p.row + d.row, p.col + d.col};
      if (img.contains(q) && img[q] == target) {
        img[q] = new_color;
        stack.push_back(q);
      }
    }
  }
  return filled;
}

}  // namespace scaff

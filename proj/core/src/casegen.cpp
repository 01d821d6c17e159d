#include "scaff/casegen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "scaff/error.hpp"

namespace scaff {
namespace {

// Uniform doubles straight from the engine bits; std distributions are not
// reproducible across standard library implementations.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }
  double jitter(double amount) { return uniform(-amount, amount); }
  int pick(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }

 private:
  std::mt19937_64 engine_;
};

struct Harmonic {
  int order = 0;
  double amplitude = 0.0;
  double phase = 0.0;
};

// Star-shaped region rho <= radius * (1 + sum a_k cos(k*theta + phi_k)).
// Amplitudes sum to at most kMaxWobble, which keeps the outline convex.
constexpr double kMaxWobble = 0.06;

struct Blob {
  double cy = 0.0;
  double cx = 0.0;
  double radius = 0.0;
  std::array<Harmonic, 2> harmonics{};

  bool contains(double y, double x) const {
    const double dy = y - cy;
    const double dx = x - cx;
    const double rho2 = dy * dy + dx * dx;
    const double outer = radius * (1.0 + kMaxWobble);
    const double inner = radius * (1.0 - kMaxWobble);
    if (rho2 > outer * outer) return false;
    if (rho2 <= inner * inner) return true;
    const double theta = std::atan2(dy, dx);
    double scale = 1.0;
    for (const Harmonic& h : harmonics) {
      scale += h.amplitude * std::cos(h.order * theta + h.phase);
    }
    const double r = radius * scale;
    return rho2 <= r * r;
  }

  double extent() const { return radius * (1.0 + kMaxWobble); }
};

struct Object {
  Blob outline;
  std::vector<Blob> holes;
};

Blob make_blob(Sampler& rng, double cy, double cx, double radius) {
  Blob b{cy, cx, radius, {}};
  b.harmonics[0] = {2, rng.uniform(0.0, kMaxWobble / 2), rng.uniform(0.0, 2 * std::numbers::pi)};
  b.harmonics[1] = {3, rng.uniform(0.0, kMaxWobble / 2), rng.uniform(0.0, 2 * std::numbers::pi)};
  return b;
}

Blob make_disk(double cy, double cx, double radius) { return Blob{cy, cx, radius, {}}; }

// Hole centred near the object centre; radius 30-38% of the outline radius
// leaves a ring at least half the radius wide.
Blob centred_hole(Sampler& rng, const Blob& outline) {
  const double r = outline.radius;
  return make_disk(outline.cy + rng.jitter(0.04 * r), outline.cx + rng.jitter(0.04 * r),
                   r * rng.uniform(0.30, 0.38));
}

// All coordinates below are fractions of the image edge; row first.
std::vector<Object> single_layout(Sampler& rng, double s, bool border, bool holes) {
  Object obj;
  if (!border) {
    const double radius = s * rng.uniform(0.28, 0.34);
    obj.outline = make_blob(rng, s * (0.5 + rng.jitter(0.05)),
                            s * (0.5 + rng.jitter(0.05)), radius);
    if (holes) obj.holes.push_back(centred_hole(rng, obj.outline));
    return {obj};
  }

  // Centre sits inside the image at 0.5-0.7 radii from one side, so the
  // outline is clipped by that side only.
  const double radius = s * rng.uniform(0.32, 0.38);
  const double depth = radius * rng.uniform(0.5, 0.7);
  const double along = s * (0.5 + rng.jitter(0.05));
  double cy = 0.0;
  double cx = 0.0;
  double inward_y = 0.0;
  double inward_x = 0.0;
  switch (rng.pick(4)) {
    case 0: cy = depth; cx = along; inward_y = 1.0; break;        // top
    case 1: cy = s - depth; cx = along; inward_y = -1.0; break;   // bottom
    case 2: cy = along; cx = depth; inward_x = 1.0; break;        // left
    default: cy = along; cx = s - depth; inward_x = -1.0; break;  // right
  }
  obj.outline = make_blob(rng, cy, cx, radius);
  if (holes) {
    // Shifted towards the image interior so the hole stays clear of the
    // clipped side.
    const double shift = 0.3 * radius;
    obj.holes.push_back(make_disk(cy + inward_y * shift, cx + inward_x * shift,
                                  radius * rng.uniform(0.20, 0.24)));
  }
  return {obj};
}

std::vector<Object> multi_layout(Sampler& rng, double s, bool border, bool holes) {
  std::vector<Object> objects;

  // Large object in the upper-left quadrant; the only one that may have a hole.
  Object big;
  big.outline = make_blob(rng, s * (0.38 + rng.jitter(0.02)), s * (0.38 + rng.jitter(0.02)),
                          s * rng.uniform(0.22, 0.25));
  if (holes) big.holes.push_back(centred_hole(rng, big.outline));
  objects.push_back(big);

  // Lower-right object; pushed past the bottom edge for border scenarios.
  Object lower;
  if (border) {
    lower.outline = make_blob(rng, s * (0.95 + rng.jitter(0.02)), s * (0.78 + rng.jitter(0.02)),
                              s * rng.uniform(0.10, 0.12));
  } else {
    lower.outline = make_blob(rng, s * (0.78 + rng.jitter(0.02)), s * (0.78 + rng.jitter(0.02)),
                              s * rng.uniform(0.09, 0.11));
  }
  objects.push_back(lower);

  // Optional third object in the upper-right corner.
  if (rng.pick(2) == 1) {
    Object upper;
    upper.outline = make_blob(rng, s * (0.18 + rng.jitter(0.02)), s * (0.80 + rng.jitter(0.02)),
                              s * rng.uniform(0.07, 0.09));
    objects.push_back(upper);
  }
  return objects;
}

Raster render(const std::vector<Object>& objects, int size, Pixel background, Pixel fg) {
  Raster mask(size, size, background);
  for (const Object& obj : objects) {
    const double reach = obj.outline.extent() + 1.0;
    const int r0 = std::max(0, static_cast<int>(std::floor(obj.outline.cy - reach)));
    const int r1 = std::min(size - 1, static_cast<int>(std::ceil(obj.outline.cy + reach)));
    const int c0 = std::max(0, static_cast<int>(std::floor(obj.outline.cx - reach)));
    const int c1 = std::min(size - 1, static_cast<int>(std::ceil(obj.outline.cx + reach)));
    for (int r = r0; r <= r1; ++r) {
      const double y = r + 0.5;
      for (int c = c0; c <= c1; ++c) {
        const double x = c + 0.5;
        if (!obj.outline.contains(y, x)) continue;
        const bool in_hole = std::any_of(obj.holes.begin(), obj.holes.end(),
                                         [&](const Blob& h) { return h.contains(y, x); });
        if (!in_hole) mask(r, c) = fg;
      }
    }
  }
  return mask;
}

}  // namespace

CaseDescriptor CaseDescriptor::from_id(int id) {
  if (id < 1 || id > 8) {
    throw Error(ErrorCode::kInvalidArgument,
                "case id must be in 1..8, got " + std::to_string(id));
  }
  const int bits = id - 1;
  return {(bits & 4) != 0, (bits & 2) != 0, (bits & 1) != 0, id};
}

CaseDescriptor CaseDescriptor::from_flags(bool multiple, bool border, bool holes) noexcept {
  return {multiple, border, holes, 1 + 4 * int{multiple} + 2 * int{border} + int{holes}};
}

GeneratedCase generate_case(int case_id, int size, int boundary_thickness,
                            std::uint64_t seed, const Palette& palette) {
  const CaseDescriptor descriptor = CaseDescriptor::from_id(case_id);
  palette.validate();
  if (size < kMinCaseSize) {
    throw Error(ErrorCode::kSizeTooSmall, "case size must be at least " +
                                              std::to_string(kMinCaseSize) + ", got " +
                                              std::to_string(size));
  }
  if (boundary_thickness < 1) {
    throw Error(ErrorCode::kInvalidArgument, "boundary thickness must be >= 1");
  }
  if (boundary_thickness * 32 > size) {
    throw Error(ErrorCode::kSizeTooSmall,
                "boundary thickness " + std::to_string(boundary_thickness) +
                    " needs an image of at least " +
                    std::to_string(boundary_thickness * 32) + " pixels");
  }

  // Mix the case id into the stream so cases sharing a seed differ.
  Sampler rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(case_id));
  const double s = static_cast<double>(size);
  const auto objects = descriptor.multiple
                           ? multi_layout(rng, s, descriptor.border, descriptor.holes)
                           : single_layout(rng, s, descriptor.border, descriptor.holes);

  Raster mask = render(objects, size, palette.background, palette.mask);
  Raster edge = extract_boundary(mask, palette);
  if (boundary_thickness > 1) {
    edge = dilate(edge, boundary_thickness - 1, palette.boundary);
    // Keep the thickened band inside the mask.
    const auto m = mask.pixels();
    auto e = edge.pixels();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (m[i] != palette.mask) e[i] = palette.background;
    }
  }
  return {descriptor, std::move(edge), std::move(mask), size};
}

Raster dilate(const Raster& img, int radius, Pixel foreground) {
  if (radius < 0) {
    throw Error(ErrorCode::kInvalidArgument, "dilation radius must be >= 0");
  }
  if (radius == 0) return img;
  const int w = img.width();
  const int h = img.height();

  // Horizontal pass: hits(r, c) = foreground within columns [c-radius, c+radius].
  std::vector<std::uint8_t> horizontal(img.size(), 0);
  std::vector<int> prefix(static_cast<std::size_t>(w) + 1);
  for (int r = 0; r < h; ++r) {
    const auto line = img.row(r);
    for (int c = 0; c < w; ++c) prefix[c + 1] = prefix[c] + (line[c] == foreground ? 1 : 0);
    for (int c = 0; c < w; ++c) {
      const int lo = std::max(0, c - radius);
      const int hi = std::min(w - 1, c + radius);
      horizontal[static_cast<std::size_t>(r) * w + c] = prefix[hi + 1] - prefix[lo] > 0;
    }
  }

  // Vertical pass over the horizontal result.
  Raster out = img;
  std::vector<int> column(static_cast<std::size_t>(h) + 1);
  for (int c = 0; c < w; ++c) {
    for (int r = 0; r < h; ++r) {
      column[r + 1] = column[r] + horizontal[static_cast<std::size_t>(r) * w + c];
    }
    for (int r = 0; r < h; ++r) {
      const int lo = std::max(0, r - radius);
      const int hi = std::min(h - 1, r + radius);
      if (column[hi + 1] - column[lo] > 0) out(r, c) = foreground;
    }
  }
  return out;
}

Raster extract_boundary(const Raster& mask, const Palette& palette) {
  const int w = mask.width();
  const int h = mask.height();
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const Pixel v = mask(r, c);
      if (v != palette.background && v != palette.mask) {
        throw Error(ErrorCode::kStrayValue,
                    "mask pixel (" + std::to_string(r) + ", " + std::to_string(c) +
                        ") has value " + std::to_string(v));
      }
    }
  }

  const auto inside = [&](int r, int c) {
    return r >= 0 && r < h && c >= 0 && c < w && mask(r, c) == palette.mask;
  };
  Raster out(w, h, palette.background);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (!inside(r, c)) continue;
      if (!inside(r - 1, c) || !inside(r + 1, c) || !inside(r, c - 1) || !inside(r, c + 1)) {
        out(r, c) = palette.boundary;
      }
    }
  }
  return out;
}

}  // namespace scaff

/**
 * Copyright 2026 The Chromaug Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "chromaug/spatial_augment.hpp"

#include <cmath>
#include <stdexcept>

#include "chromaug/errors.hpp"

namespace chromaug {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct InverseTransform {
  double cos_t;
  double sin_t;
  double shift_x;   // translation in pixels
  double shift_y;
  double center_x;
  double center_y;
  bool flip_h;
  bool flip_v;
  int width;
  int height;

  // Maps an output pixel center back to its source position: undo the
  // translation, then the rotation, then the flips.
  std::pair<double, double> source_of(int x, int y) const {
    const double dx = (x - shift_x) - center_x;
    const double dy = (y - shift_y) - center_y;
    double sx = center_x + cos_t * dx - sin_t * dy;
    double sy = center_y + sin_t * dx + cos_t * dy;
    if (flip_h) {
      sx = (width - 1) - sx;
    }
    if (flip_v) {
      sy = (height - 1) - sy;
    }
    return {sx, sy};
  }
};

InverseTransform make_inverse(const SpatialParams& params, int width,
                              int height) {
  InverseTransform t;
  t.width = width;
  t.height = height;
  t.center_x = (width - 1) / 2.0;
  t.center_y = (height - 1) / 2.0;
  t.shift_x = params.translate_x * width;
  t.shift_y = params.translate_y * height;
  t.flip_h = params.flip_h;
  t.flip_v = params.flip_v;

  // Exact multiples of 90 degrees get exact trig values so the mapping
  // permutes pixel centers with no rounding drift.
  const double deg = params.rotation_deg;
  if (std::fmod(deg, 90.0) == 0.0) {
    const int quarter = ((static_cast<int>(deg) / 90) % 4 + 4) % 4;
    static constexpr double kCos[4] = {1.0, 0.0, -1.0, 0.0};
    static constexpr double kSin[4] = {0.0, 1.0, 0.0, -1.0};
    t.cos_t = kCos[quarter];
    t.sin_t = kSin[quarter];
  } else {
    const double rad = deg * kPi / 180.0;
    t.cos_t = std::cos(rad);
    t.sin_t = std::sin(rad);
  }
  return t;
}

// Symmetric reflection (edge pixels included), used to fill regions the
// transform exposes without injecting artificial black borders.
int reflect_index(int i, int n) {
  if (n == 1) {
    return 0;
  }
  const int period = 2 * n;
  i = ((i % period) + period) % period;
  return i < n ? i : period - 1 - i;
}

float sample_bilinear(const RasterImage& image, double sx, double sy, int c) {
  const int x0 = static_cast<int>(std::floor(sx));
  const int y0 = static_cast<int>(std::floor(sy));
  const double fx = sx - x0;
  const double fy = sy - y0;
  const int xs[2] = {reflect_index(x0, image.width()),
                     reflect_index(x0 + 1, image.width())};
  const int ys[2] = {reflect_index(y0, image.height()),
                     reflect_index(y0 + 1, image.height())};
  const double v =
      (1.0 - fy) * ((1.0 - fx) * image.at(xs[0], ys[0], c) +
                    fx * image.at(xs[1], ys[0], c)) +
      fy * ((1.0 - fx) * image.at(xs[0], ys[1], c) +
            fx * image.at(xs[1], ys[1], c));
  return static_cast<float>(v);
}

}  // namespace

void SpatialParams::validate() const {
  if (!(rotation_deg >= -180.0 && rotation_deg <= 180.0)) {
    throw std::invalid_argument("rotation_deg must lie in [-180, 180]");
  }
  if (!(translate_x >= -0.10 && translate_x <= 0.10) ||
      !(translate_y >= -0.10 && translate_y <= 0.10)) {
    throw std::invalid_argument("translation must lie in [-0.10, 0.10]");
  }
}

std::pair<RasterImage, BinaryMask> apply_spatial(const RasterImage& image,
                                                 const BinaryMask& mask,
                                                 const SpatialParams& params) {
  if (image.width() != mask.width() || image.height() != mask.height()) {
    throw DimensionMismatch("image and mask dimensions differ");
  }
  params.validate();
  const InverseTransform inverse =
      make_inverse(params, image.width(), image.height());

  RasterImage out_image(image.width(), image.height());
  BinaryMask out_mask(mask.width(), mask.height());
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      const auto [sx, sy] = inverse.source_of(x, y);
      for (int c = 0; c < RasterImage::kChannels; ++c) {
        out_image.at(x, y, c) = sample_bilinear(image, sx, sy, c);
      }
      const int mx = static_cast<int>(std::lround(sx));
      const int my = static_cast<int>(std::lround(sy));
      if (mx >= 0 && mx < mask.width() && my >= 0 && my < mask.height()) {
        out_mask.set(x, y, mask.at(mx, my));
      }
    }
  }
  return {std::move(out_image), std::move(out_mask)};
}

}  // namespace chromaug

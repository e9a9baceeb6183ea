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
#include "chromaug/color_math.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "chromaug/errors.hpp"

namespace chromaug {

IlluminantProfile::IlluminantProfile(double r, double g, double b)
    : r_(r), g_(g), b_(b) {
  if (!(r > 0.0) || !(g > 0.0) || !(b > 0.0)) {
    std::ostringstream msg;
    msg << "illuminant scale components must be positive, got (" << r << ", "
        << g << ", " << b << ")";
    throw std::invalid_argument(msg.str());
  }
  // Forced by the defining mean ratio; reject triples from other spaces.
  if (std::abs(r + g + b - 3.0) > 1e-9) {
    std::ostringstream msg;
    msg << "illuminant scale components must sum to 3, got " << (r + g + b);
    throw std::invalid_argument(msg.str());
  }
}

IlluminantProfile compute_illuminant(const RasterImage& image) {
  double sum[3] = {0.0, 0.0, 0.0};
  auto values = image.values();
  for (std::size_t i = 0; i < values.size(); i += RasterImage::kChannels) {
    sum[0] += values[i];
    sum[1] += values[i + 1];
    sum[2] += values[i + 2];
  }
  const double n = static_cast<double>(image.pixel_count());
  const double combined_mean = (sum[0] + sum[1] + sum[2]) / (3.0 * n);
  if (combined_mean <= kBlackMeanFloor) {
    throw DegenerateImage("combined mean intensity is below the black floor; "
                          "illuminant undefined");
  }
  // A channel whose mean vanishes would yield a zero scale, which no valid
  // profile can carry (nothing could be divided by it downstream).
  for (double channel_sum : sum) {
    if (channel_sum / n <= kBlackMeanFloor) {
      throw DegenerateImage("a channel mean is below the black floor; "
                            "illuminant scales degenerate");
    }
  }
  return IlluminantProfile(sum[0] / n / combined_mean,
                           sum[1] / n / combined_mean,
                           sum[2] / n / combined_mean);
}

RasterImage white_balance(const RasterImage& image,
                          const IlluminantProfile& profile) {
  const double scale[3] = {profile.r(), profile.g(), profile.b()};
  RasterImage out(image.width(), image.height());
  auto src = image.values();
  auto dst = out.values();
  for (std::size_t i = 0; i < src.size(); i += RasterImage::kChannels) {
    dst[i] = static_cast<float>(src[i] / scale[0]);
    dst[i + 1] = static_cast<float>(src[i + 1] / scale[1]);
    dst[i + 2] = static_cast<float>(src[i + 2] / scale[2]);
  }
  return out;
}

RasterImage recast(const RasterImage& image, const IlluminantProfile& source,
                   const IlluminantProfile& target) {
  // Combining the scales first makes the self-recast a true fixed point:
  // target == source gives a scale of exactly 1.0 per channel.
  const double scale[3] = {target.r() / source.r(), target.g() / source.g(),
                           target.b() / source.b()};
  RasterImage out(image.width(), image.height());
  auto src = image.values();
  auto dst = out.values();
  for (std::size_t i = 0; i < src.size(); i += RasterImage::kChannels) {
    for (int c = 0; c < RasterImage::kChannels; ++c) {
      const double v = src[i + c] * scale[c];
      dst[i + c] = static_cast<float>(
          std::clamp(v, 0.0, static_cast<double>(RasterImage::kNominalMax)));
    }
  }
  return out;
}

double illuminant_distance(const IlluminantProfile& a,
                           const IlluminantProfile& b) {
  const double dr = a.r() - b.r();
  const double dg = a.g() - b.g();
  const double db = a.b() - b.b();
  return std::sqrt(dr * dr + dg * dg + db * db);
}

SaturationStats rgb_to_hsv_saturation(const RasterImage& image) {
  double total = 0.0;
  auto values = image.values();
  for (std::size_t i = 0; i < values.size(); i += RasterImage::kChannels) {
    const float r = values[i];
    const float g = values[i + 1];
    const float b = values[i + 2];
    const float mx = std::max({r, g, b});
    const float mn = std::min({r, g, b});
    if (mx > 0.0f) {
      total += static_cast<double>(mx - mn) / mx * 255.0;
    }
  }
  SaturationStats stats;
  stats.mean_saturation = total / static_cast<double>(image.pixel_count());
  stats.per_image_values = {stats.mean_saturation};
  return stats;
}

}  // namespace chromaug

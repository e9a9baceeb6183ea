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
#ifndef CHROMAUG_COLOR_MATH_HPP_
#define CHROMAUG_COLOR_MATH_HPP_

#include <vector>

#include "chromaug/image.hpp"

namespace chromaug {

/// Floor on the combined channel mean below which an image is considered
/// black and its illuminant undefined.
inline constexpr double kBlackMeanFloor = 1e-6;

/// Per-channel illuminant scale triple under the gray-world assumption:
/// each component is that channel's mean divided by one third of the mean
/// over all channel values, so the components always sum to 3.
class IlluminantProfile {
 public:
  IlluminantProfile(double r, double g, double b);

  double r() const { return r_; }
  double g() const { return g_; }
  double b() const { return b_; }
  double component(int c) const { return c == 0 ? r_ : (c == 1 ? g_ : b_); }

  bool operator==(const IlluminantProfile& other) const = default;

 private:
  double r_;
  double g_;
  double b_;
};

/// Mean HSV saturation on the [0, 255] scale, one value per image.
struct SaturationStats {
  double mean_saturation = 0.0;
  std::vector<double> per_image_values;
};

/// Gray-world illuminant estimate: channel means divided by one third of
/// the combined mean. Throws DegenerateImage for (near-)black inputs and
/// for inputs with an all-zero channel, where the scales degenerate.
IlluminantProfile compute_illuminant(const RasterImage& image);

/// Divides every channel by its scale component. No clipping: the result
/// is an exact intermediate and may exceed the nominal range.
RasterImage white_balance(const RasterImage& image,
                          const IlluminantProfile& profile);

/// (image / source) * target, componentwise, clipped to [0, 255].
/// The two scales are combined before touching pixels, so recasting an
/// image onto its own illuminant is an exact identity.
RasterImage recast(const RasterImage& image, const IlluminantProfile& source,
                   const IlluminantProfile& target);

/// Euclidean distance between two scale triples in RGB scale space.
double illuminant_distance(const IlluminantProfile& a,
                           const IlluminantProfile& b);

/// Per-pixel HSV saturation S = (max - min) / max (0 where max = 0),
/// scaled to [0, 255] and averaged over all pixels, achromatic ones
/// included.
SaturationStats rgb_to_hsv_saturation(const RasterImage& image);

}  // namespace chromaug

#endif  // CHROMAUG_COLOR_MATH_HPP_

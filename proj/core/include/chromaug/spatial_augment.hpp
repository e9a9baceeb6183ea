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
#ifndef CHROMAUG_SPATIAL_AUGMENT_HPP_
#define CHROMAUG_SPATIAL_AUGMENT_HPP_

#include <utility>

#include "chromaug/image.hpp"

namespace chromaug {

/// One rigid transform: flips, then rotation about the image center
/// (positive angles turn the content counterclockwise on screen), then
/// translation by a fraction of the canvas. The canvas never grows;
/// exposed image regions fill by edge reflection, exposed mask regions
/// with background.
struct SpatialParams {
  double rotation_deg = 0.0;   // [-180, 180]
  bool flip_h = false;
  bool flip_v = false;
  double translate_x = 0.0;    // [-0.10, 0.10], fraction of width
  double translate_y = 0.0;    // [-0.10, 0.10], fraction of height

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

/// Applies the same transform to an image and its mask. The image is
/// resampled bilinearly, the mask nearest-neighbor so it stays strictly
/// binary. Rotations by exact multiples of 90 degrees take an exact
/// pixel-permutation path with no interpolation loss.
/// Throws DimensionMismatch when the pair sizes differ.
std::pair<RasterImage, BinaryMask> apply_spatial(const RasterImage& image,
                                                 const BinaryMask& mask,
                                                 const SpatialParams& params);

}  // namespace chromaug

#endif  // CHROMAUG_SPATIAL_AUGMENT_HPP_

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
#ifndef CHROMAUG_MASK_TOOLS_HPP_
#define CHROMAUG_MASK_TOOLS_HPP_

#include "chromaug/image.hpp"

namespace chromaug {

/// Pixel-overlap scores for one predicted/reference mask pair.
///
/// Empty-denominator conventions follow challenge scoring: both masks
/// empty scores jaccard/dice 1, sensitivity is 1 when the reference is
/// empty, specificity is 1 when the reference covers everything.
struct SegMetrics {
  double jaccard = 0.0;
  /// jaccard when it exceeds 0.65 (strictly), zero otherwise.
  double thresholded_jaccard = 0.0;
  double dice = 0.0;
  double accuracy = 0.0;
  double sensitivity = 0.0;
  double specificity = 0.0;
};

/// Smooths a predicted mask with a morphological opening then closing
/// (disk element of `smooth_radius` pixels; the element is clipped at the
/// canvas edge) and keeps only the largest 8-connected component, ties
/// resolved by the topmost-leftmost component anchor. The pass repeats
/// until the mask stops changing, so the whole operation is idempotent:
/// component extraction can expose shapes the next smoothing round would
/// alter, and iterating to the fixed point absorbs that. An
/// all-background mask passes through unchanged.
BinaryMask postprocess_mask(const BinaryMask& mask, int smooth_radius);

/// Pixel-count metrics between a prediction and reference of equal size.
/// Throws DimensionMismatch otherwise.
SegMetrics compute_metrics(const BinaryMask& pred, const BinaryMask& truth);

}  // namespace chromaug

#endif  // CHROMAUG_MASK_TOOLS_HPP_

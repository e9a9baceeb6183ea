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
#ifndef CHROMAUG_AUGMENT_ENGINE_HPP_
#define CHROMAUG_AUGMENT_ENGINE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chromaug/color_math.hpp"
#include "chromaug/image.hpp"

namespace chromaug {

struct PoolEntry {
  std::string image_id;
  IlluminantProfile profile;
};

/// The illuminant scales of every usable image in a dataset, keyed by a
/// stable per-image identifier. Read-only during augmentation.
class IlluminantPool {
 public:
  /// Throws std::invalid_argument on a duplicate id.
  void add(std::string image_id, const IlluminantProfile& profile);

  const PoolEntry* find(std::string_view image_id) const;
  const std::vector<PoolEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<PoolEntry> entries_;
};

/// Knobs for the two regulating conditions. Defaults carry constants
/// tuned on dermoscopy datasets.
struct SelectionConfig {
  /// Target fraction of the maximum color difference.
  double c_threshold = 0.4;
  /// Half width of the accepted band around c_threshold. Exact equality
  /// never occurs over a finite pool, so the first condition accepts
  /// |ratio - c_threshold| <= c_tolerance.
  double c_tolerance = 0.05;
  /// Accepted range for the augmented image's mean saturation, inclusive.
  double saturation_min = 15.0;
  double saturation_max = 115.0;

  /// Throws std::invalid_argument if any range constraint is violated.
  void validate() const;
};

enum class AugmentStatus {
  kAugmented,
  kNoCandidate,
};

/// Provenance of one augmentation attempt. For kAugmented outcomes the
/// optional fields are all present, the distance ratio lies inside the
/// accepted band and the result saturation inside the saturation band.
struct AugmentationRecord {
  std::string source_id;
  std::optional<std::string> chosen_illuminant_id;
  std::optional<double> distance_ratio;
  std::optional<double> result_saturation;
  AugmentStatus status = AugmentStatus::kNoCandidate;
};

struct Candidate {
  std::string image_id;
  IlluminantProfile profile;
  double distance_ratio;
};

struct AugmentOutcome {
  std::optional<RasterImage> image;
  AugmentationRecord record;
};

/// Pool entry at maximum distance from `beta`, excluding the source
/// image's own entry. Distance ties resolve to the lexicographically
/// smallest id. Throws EmptyPool when no eligible entry exists.
PoolEntry furthest_illuminant(const IlluminantProfile& beta,
                              const IlluminantPool& pool,
                              std::string_view source_id);

/// All pool entries whose distance ratio r = d(beta, entry) / d(beta,
/// furthest) falls within c_tolerance of c_threshold, ordered by
/// |r - c_threshold| ascending, ties by id. The source's own entry is
/// never a candidate. Throws DegeneratePool when the maximum distance is
/// zero and EmptyPool when the pool holds no counterpart at all.
std::vector<Candidate> rank_candidates(const IlluminantProfile& beta,
                                       const IlluminantPool& pool,
                                       const SelectionConfig& config,
                                       std::string_view source_id);

/// Walks the ranked candidates and returns the first recast image whose
/// mean saturation (measured on the 8-bit quantized result, the value a
/// written file reproduces) lies inside the saturation band, together
/// with a full provenance record. When every candidate oversaturates or
/// the band is empty, returns no image and a kNoCandidate record; the
/// caller decides the fallback.
AugmentOutcome select_and_augment(const RasterImage& image,
                                  const std::string& source_id,
                                  const IlluminantPool& pool,
                                  const SelectionConfig& config);

}  // namespace chromaug

#endif  // CHROMAUG_AUGMENT_ENGINE_HPP_

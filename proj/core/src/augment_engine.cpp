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
#include "chromaug/augment_engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "chromaug/errors.hpp"

namespace chromaug {

void IlluminantPool::add(std::string image_id,
                         const IlluminantProfile& profile) {
  if (find(image_id) != nullptr) {
    throw std::invalid_argument("duplicate pool id: " + image_id);
  }
  entries_.push_back(PoolEntry{std::move(image_id), profile});
}

const PoolEntry* IlluminantPool::find(std::string_view image_id) const {
  for (const PoolEntry& entry : entries_) {
    if (entry.image_id == image_id) {
      return &entry;
    }
  }
  return nullptr;
}

void SelectionConfig::validate() const {
  if (!(c_threshold > 0.0 && c_threshold < 1.0)) {
    throw std::invalid_argument("c_threshold must lie in (0, 1)");
  }
  if (!(c_tolerance >= 0.0)) {
    throw std::invalid_argument("c_tolerance must be >= 0");
  }
  if (!(saturation_min >= 0.0 && saturation_min < saturation_max &&
        saturation_max <= 255.0)) {
    throw std::invalid_argument(
        "saturation band must satisfy 0 <= min < max <= 255");
  }
}

PoolEntry furthest_illuminant(const IlluminantProfile& beta,
                              const IlluminantPool& pool,
                              std::string_view source_id) {
  const PoolEntry* best = nullptr;
  double best_distance = -1.0;
  for (const PoolEntry& entry : pool.entries()) {
    if (entry.image_id == source_id) {
      continue;
    }
    const double d = illuminant_distance(beta, entry.profile);
    if (d > best_distance ||
        (d == best_distance && entry.image_id < best->image_id)) {
      best = &entry;
      best_distance = d;
    }
  }
  if (best == nullptr) {
    std::ostringstream msg;
    msg << "no counterpart illuminant for '" << source_id << "'";
    throw EmptyPool(msg.str());
  }
  return *best;
}

std::vector<Candidate> rank_candidates(const IlluminantProfile& beta,
                                       const IlluminantPool& pool,
                                       const SelectionConfig& config,
                                       std::string_view source_id) {
  config.validate();
  const PoolEntry alpha = furthest_illuminant(beta, pool, source_id);
  const double max_distance = illuminant_distance(beta, alpha.profile);
  if (max_distance == 0.0) {
    throw DegeneratePool("all pool illuminants coincide; distance ratio "
                         "undefined");
  }
  std::vector<Candidate> candidates;
  for (const PoolEntry& entry : pool.entries()) {
    if (entry.image_id == source_id) {
      continue;
    }
    const double ratio =
        illuminant_distance(beta, entry.profile) / max_distance;
    if (std::abs(ratio - config.c_threshold) <= config.c_tolerance) {
      candidates.push_back(Candidate{entry.image_id, entry.profile, ratio});
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [&](const Candidate& a, const Candidate& b) {
              const double da = std::abs(a.distance_ratio - config.c_threshold);
              const double db = std::abs(b.distance_ratio - config.c_threshold);
              if (da != db) {
                return da < db;
              }
              return a.image_id < b.image_id;
            });
  return candidates;
}

AugmentOutcome select_and_augment(const RasterImage& image,
                                  const std::string& source_id,
                                  const IlluminantPool& pool,
                                  const SelectionConfig& config) {
  const PoolEntry* source = pool.find(source_id);
  if (source == nullptr) {
    throw std::invalid_argument("pool holds no profile for '" + source_id +
                                "'");
  }
  AugmentOutcome outcome;
  outcome.record.source_id = source_id;

  for (const Candidate& candidate :
       rank_candidates(source->profile, pool, config, source_id)) {
    RasterImage augmented = recast(image, source->profile, candidate.profile);
    const double saturation =
        rgb_to_hsv_saturation(quantized(augmented)).mean_saturation;
    if (saturation >= config.saturation_min &&
        saturation <= config.saturation_max) {
      outcome.record.chosen_illuminant_id = candidate.image_id;
      outcome.record.distance_ratio = candidate.distance_ratio;
      outcome.record.result_saturation = saturation;
      outcome.record.status = AugmentStatus::kAugmented;
      outcome.image = std::move(augmented);
      return outcome;
    }
  }
  outcome.record.status = AugmentStatus::kNoCandidate;
  return outcome;
}

}  // namespace chromaug

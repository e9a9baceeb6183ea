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
#ifndef CHROMAUG_DATASET_PIPELINE_HPP_
#define CHROMAUG_DATASET_PIPELINE_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "chromaug/augment_engine.hpp"

namespace chromaug {

struct ManifestEntry {
  std::string image_id;
  std::string image_rel;                 // path as written in the manifest
  std::optional<std::string> mask_rel;
  std::filesystem::path image_path;      // resolved against the root
  std::optional<std::filesystem::path> mask_path;
};

/// Listing of a dataset on disk. Construction validates that ids are
/// unique and filesystem-safe and that every referenced file exists;
/// entries are kept sorted by id so every downstream walk is
/// deterministic.
class DatasetManifest {
 public:
  DatasetManifest(std::string name, std::filesystem::path root,
                  std::vector<ManifestEntry> entries);

  /// Reads a manifest JSON file ({"dataset_root": ..., "entries":
  /// [{"image_id", "image_path", "mask_path"?}]}). A relative root
  /// resolves against the manifest file's directory.
  static DatasetManifest load(const std::filesystem::path& manifest_file);

  /// Builds a manifest by scanning a directory for image files. Files
  /// whose stem ends in "_mask" or "_segmentation" pair up as masks of
  /// the image with the matching stem instead of becoming entries.
  static DatasetManifest scan_directory(const std::filesystem::path& root);

  void save(const std::filesystem::path& manifest_file) const;

  const std::string& name() const { return name_; }
  const std::filesystem::path& root() const { return root_; }
  const std::vector<ManifestEntry>& entries() const { return entries_; }

 private:
  std::string name_;
  std::filesystem::path root_;
  std::vector<ManifestEntry> entries_;
};

enum class IssueKind {
  kUnreadable,       // file missing or undecodable at processing time
  kDegenerate,       // black/degenerate image, no illuminant
  kMissingProfile,   // manifest entry absent from the pool
  kNoCounterpart,    // pool too small or collapsed for this image
  kMismatchedPair,   // image/mask or prediction/reference sizes differ
  kEmptyManifest,
};

std::string_view issue_kind_name(IssueKind kind);

struct PipelineIssue {
  IssueKind kind;
  std::string image_id;   // empty for dataset-level issues
  std::string detail;
};

struct PoolBuildResult {
  IlluminantPool pool;
  std::vector<PipelineIssue> issues;
};

/// One illuminant profile per readable, non-degenerate image. Failures
/// are collected, never fatal.
PoolBuildResult build_pool(const DatasetManifest& manifest, int workers = 1);

enum class AugmentPolicy {
  kAdaptive,   // regulated candidate selection
  kRandom,     // uniform draw over the pool, no conditions checked
};

struct AugmentOptions {
  SelectionConfig selection{};
  std::uint64_t seed = 0;
  int workers = 1;
  /// On a kNoCandidate outcome, retry with c_tolerance widened in +0.05
  /// steps up to 0.25 before giving up. Off by default: skipping keeps
  /// every emitted image regulated by the configured band.
  bool widen_tolerance = false;
};

struct AugmentedPair {
  std::string original_id;
  std::optional<std::string> augmented_id;   // "<id>_aug", null when skipped
  AugmentationRecord record;
};

/// Full provenance of one augmentation run: exactly one pair per
/// manifest entry (the 1:1 pairing), plus the seed and configuration
/// needed to reproduce it byte for byte.
struct AugmentedSetManifest {
  std::vector<AugmentedPair> pairs;   // sorted by original_id
  std::uint64_t seed = 0;
  SelectionConfig selection{};
  AugmentPolicy policy = AugmentPolicy::kAdaptive;
  bool widen_tolerance = false;
  std::vector<PipelineIssue> issues;

  void save(const std::filesystem::path& path) const;
  static AugmentedSetManifest load(const std::filesystem::path& path);
};

/// Runs the regulated selection over every manifest entry and writes the
/// accepted augmentations as "<id>_aug.png" under out_root. Entries with
/// no acceptable candidate are flagged and produce no file. The pool must
/// come from the same manifest (checked by id). Output is identical
/// across runs and worker counts for a fixed seed.
AugmentedSetManifest augment_dataset(const DatasetManifest& manifest,
                                     const IlluminantPool& pool,
                                     const AugmentOptions& options,
                                     const std::filesystem::path& out_root);

/// Comparison baseline: recasts every image onto a uniformly drawn pool
/// illuminant with no condition checks. Records still carry the distance
/// ratio and resulting saturation so the two policies can be contrasted.
AugmentedSetManifest random_policy_augment(const DatasetManifest& manifest,
                                           const IlluminantPool& pool,
                                           const AugmentOptions& options,
                                           const std::filesystem::path& out_root);

struct ScatterRow {
  std::string dataset;
  std::string image_id;
  double beta_r = 0.0;
  double beta_g = 0.0;
  double beta_b = 0.0;
  double mean_saturation = 0.0;
};

struct SaturationHistogram {
  std::vector<double> edges;          // bins + 1 edges spanning [0, 255]
  std::vector<std::size_t> counts;    // right-open bins, last bin closed
};

struct DatasetAnalysis {
  std::string dataset;
  std::size_t image_count = 0;        // images that produced a row
  SaturationHistogram histogram;
};

/// Per-image mean saturation and illuminant scales for one or more
/// dataset variants, with a per-variant histogram of the saturations.
struct AnalysisExport {
  std::vector<DatasetAnalysis> datasets;
  std::vector<ScatterRow> scatter;    // one row per analyzed image
  std::vector<PipelineIssue> issues;
};

AnalysisExport export_analysis(const std::vector<DatasetManifest>& manifests,
                               int bins, int workers = 1);

/// One CSV row per analyzed image:
/// dataset,image_id,mean_saturation,beta_r,beta_g,beta_b
void write_analysis_csv(const AnalysisExport& analysis,
                        const std::filesystem::path& path);

/// Histogram object with bin edges and per-dataset counts.
void write_analysis_json(const AnalysisExport& analysis,
                         const std::filesystem::path& path);

}  // namespace chromaug

#endif  // CHROMAUG_DATASET_PIPELINE_HPP_

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
#include "chromaug/dataset_pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include <nlohmann/json.hpp>

#include "chromaug/color_math.hpp"
#include "chromaug/errors.hpp"
#include "chromaug/image_io.hpp"
#include "chromaug/parallel.hpp"
#include "chromaug/rng.hpp"

namespace chromaug {
namespace {

using nlohmann::json;

/// The optional retry schedule for kNoCandidate outcomes.
constexpr double kWidenStep = 0.05;
constexpr double kMaxWidenedTolerance = 0.25;

constexpr std::string_view kAugmentedSuffix = "_aug";

bool valid_id(const std::string& id) {
  if (id.empty() || id == "." || id == "..") {
    return false;
  }
  for (char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
    if (!ok) {
      return false;
    }
  }
  return true;
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoFailure("cannot open '" + path.string() + "' for writing");
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    throw IoFailure("failed writing '" + path.string() + "'");
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoFailure("cannot open '" + path.string() + "'");
  }
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw IoFailure("cannot parse '" + path.string() + "': " + e.what());
  }
}

/// Shortest decimal form that parses back to the same double. Reusing the
/// JSON serializer keeps the CSV export round-trip exact as well.
std::string number_text(double value) { return json(value).dump(); }

template <typename T>
json opt_json(const std::optional<T>& value) {
  return value.has_value() ? json(*value) : json(nullptr);
}

std::string_view status_name(AugmentStatus status) {
  return status == AugmentStatus::kAugmented ? "augmented" : "no_candidate";
}

AugmentStatus parse_status(const std::string& text,
                           const std::filesystem::path& path) {
  if (text == "augmented") {
    return AugmentStatus::kAugmented;
  }
  if (text == "no_candidate") {
    return AugmentStatus::kNoCandidate;
  }
  throw IoFailure("unknown status '" + text + "' in '" + path.string() + "'");
}

IssueKind parse_issue_kind(const std::string& text,
                           const std::filesystem::path& path) {
  for (IssueKind kind :
       {IssueKind::kUnreadable, IssueKind::kDegenerate,
        IssueKind::kMissingProfile, IssueKind::kNoCounterpart,
        IssueKind::kMismatchedPair, IssueKind::kEmptyManifest}) {
    if (text == issue_kind_name(kind)) {
      return kind;
    }
  }
  throw IoFailure("unknown issue kind '" + text + "' in '" + path.string() +
                  "'");
}

}  // namespace

std::string_view issue_kind_name(IssueKind kind) {
  switch (kind) {
    case IssueKind::kUnreadable:
      return "unreadable";
    case IssueKind::kDegenerate:
      return "degenerate_image";
    case IssueKind::kMissingProfile:
      return "missing_profile";
    case IssueKind::kNoCounterpart:
      return "no_counterpart";
    case IssueKind::kMismatchedPair:
      return "mismatched_pair";
    case IssueKind::kEmptyManifest:
      return "empty_manifest";
  }
  return "unknown";
}

DatasetManifest::DatasetManifest(std::string name, std::filesystem::path root,
                                 std::vector<ManifestEntry> entries)
    : name_(std::move(name)),
      root_(std::move(root)),
      entries_(std::move(entries)) {
  if (name_.empty()) {
    throw std::invalid_argument("dataset name must not be empty");
  }
  if (name_.find_first_of(",\"\r\n") != std::string::npos) {
    throw std::invalid_argument(
        "dataset name must not contain commas, quotes or line breaks");
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const ManifestEntry& a, const ManifestEntry& b) {
              return a.image_id < b.image_id;
            });
  const ManifestEntry* previous = nullptr;
  for (const ManifestEntry& entry : entries_) {
    if (!valid_id(entry.image_id)) {
      throw std::invalid_argument("invalid image id '" + entry.image_id +
                                  "': ids are limited to [A-Za-z0-9._-]");
    }
    if (previous != nullptr && previous->image_id == entry.image_id) {
      throw std::invalid_argument("duplicate image id '" + entry.image_id +
                                  "'");
    }
    previous = &entry;
    if (!std::filesystem::exists(entry.image_path)) {
      throw IoFailure("missing image file '" + entry.image_path.string() +
                      "'");
    }
    if (entry.mask_path.has_value() &&
        !std::filesystem::exists(*entry.mask_path)) {
      throw IoFailure("missing mask file '" + entry.mask_path->string() + "'");
    }
  }
}

DatasetManifest DatasetManifest::load(
    const std::filesystem::path& manifest_file) {
  const json doc = read_json_file(manifest_file);
  const std::filesystem::path base = manifest_file.has_parent_path()
                                         ? manifest_file.parent_path()
                                         : std::filesystem::path(".");
  try {
    std::filesystem::path root = doc.value("dataset_root", std::string("."));
    if (root.is_relative()) {
      root = base / root;
    }
    root = root.lexically_normal();
    std::string name = doc.value("name", manifest_file.stem().string());

    std::vector<ManifestEntry> entries;
    for (const json& item : doc.at("entries")) {
      ManifestEntry entry;
      entry.image_id = item.at("image_id").get<std::string>();
      entry.image_rel = item.at("image_path").get<std::string>();
      entry.image_path = root / entry.image_rel;
      if (item.contains("mask_path") && !item.at("mask_path").is_null()) {
        entry.mask_rel = item.at("mask_path").get<std::string>();
        entry.mask_path = root / *entry.mask_rel;
      }
      entries.push_back(std::move(entry));
    }
    return DatasetManifest(std::move(name), std::move(root),
                           std::move(entries));
  } catch (const json::exception& e) {
    throw IoFailure("malformed manifest '" + manifest_file.string() +
                    "': " + e.what());
  }
}

namespace {

constexpr std::string_view kImageExtensions[] = {".bmp", ".jpeg", ".jpg",
                                                 ".png"};

/// Stem suffixes that mark a file as the mask of the image whose stem
/// precedes the suffix.
constexpr std::string_view kMaskSuffixes[] = {"_mask", "_segmentation"};

bool has_image_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return std::find(std::begin(kImageExtensions), std::end(kImageExtensions),
                   ext) != std::end(kImageExtensions);
}

std::optional<std::string> mask_base_stem(const std::string& stem) {
  for (std::string_view suffix : kMaskSuffixes) {
    if (stem.size() > suffix.size() && stem.ends_with(suffix)) {
      return stem.substr(0, stem.size() - suffix.size());
    }
  }
  return std::nullopt;
}

}  // namespace

DatasetManifest DatasetManifest::scan_directory(
    const std::filesystem::path& root) {
  if (!std::filesystem::is_directory(root)) {
    throw IoFailure("'" + root.string() + "' is not a directory");
  }
  // Directory iteration order is unspecified; sort before pairing so the
  // manifest is identical on every filesystem.
  std::vector<std::string> files;
  for (const auto& item : std::filesystem::directory_iterator(root)) {
    if (item.is_regular_file() && has_image_extension(item.path())) {
      files.push_back(item.path().filename().string());
    }
  }
  std::sort(files.begin(), files.end());

  std::map<std::string, std::string> mask_for;  // base stem -> mask file
  std::vector<std::pair<std::string, std::string>> images;  // stem, file
  for (const std::string& file : files) {
    const std::string stem = std::filesystem::path(file).stem().string();
    if (const auto base = mask_base_stem(stem)) {
      mask_for.emplace(*base, file);  // first name alphabetically wins
    } else {
      images.emplace_back(stem, file);
    }
  }

  std::vector<ManifestEntry> entries;
  entries.reserve(images.size());
  for (auto& [stem, file] : images) {
    ManifestEntry entry;
    entry.image_id = stem;
    entry.image_rel = file;
    entry.image_path = root / file;
    if (const auto found = mask_for.find(stem); found != mask_for.end()) {
      entry.mask_rel = found->second;
      entry.mask_path = root / found->second;
    }
    entries.push_back(std::move(entry));
  }

  std::string name = root.filename().string();
  if (name.empty()) {  // path had a trailing separator
    name = root.parent_path().filename().string();
  }
  if (name.empty()) {
    name = "dataset";
  }
  return DatasetManifest(std::move(name), root, std::move(entries));
}

void DatasetManifest::save(const std::filesystem::path& manifest_file) const {
  json doc;
  doc["dataset_root"] = root_.generic_string();
  json entry_list = json::array();
  for (const ManifestEntry& entry : entries_) {
    json item;
    item["image_id"] = entry.image_id;
    item["image_path"] = entry.image_rel;
    if (entry.mask_rel.has_value()) {
      item["mask_path"] = *entry.mask_rel;
    }
    entry_list.push_back(std::move(item));
  }
  doc["entries"] = std::move(entry_list);
  doc["name"] = name_;
  write_text_file(manifest_file, doc.dump(2) + "\n");
}

PoolBuildResult build_pool(const DatasetManifest& manifest, int workers) {
  PoolBuildResult result;
  const std::vector<ManifestEntry>& entries = manifest.entries();
  if (entries.empty()) {
    result.issues.push_back(
        {IssueKind::kEmptyManifest, "", "manifest has no entries"});
    return result;
  }

  std::vector<std::optional<PoolEntry>> slots(entries.size());
  std::vector<std::optional<PipelineIssue>> issues(entries.size());
  parallel_for_index(entries.size(), workers, [&](std::size_t i) {
    const ManifestEntry& entry = entries[i];
    try {
      const RasterImage image = read_image(entry.image_path);
      slots[i] = PoolEntry{entry.image_id, compute_illuminant(image)};
    } catch (const DegenerateImage& e) {
      issues[i] = PipelineIssue{IssueKind::kDegenerate, entry.image_id,
                                e.what()};
    } catch (const IoFailure& e) {
      issues[i] = PipelineIssue{IssueKind::kUnreadable, entry.image_id,
                                e.what()};
    }
  });

  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (slots[i].has_value()) {
      result.pool.add(std::move(slots[i]->image_id), slots[i]->profile);
    }
    if (issues[i].has_value()) {
      result.issues.push_back(std::move(*issues[i]));
    }
  }
  return result;
}

namespace {

struct WorkResult {
  AugmentedPair pair;
  std::vector<PipelineIssue> issues;
};

std::string augmented_id_for(const std::string& image_id) {
  return image_id + std::string(kAugmentedSuffix);
}

/// Loads the entry's image, or records why it cannot contribute. Shared
/// preamble of both policies.
std::optional<RasterImage> load_source(const ManifestEntry& entry,
                                       const IlluminantPool& pool,
                                       WorkResult& result) {
  if (pool.find(entry.image_id) == nullptr) {
    result.issues.push_back({IssueKind::kMissingProfile, entry.image_id,
                             "no illuminant profile in the pool"});
    return std::nullopt;
  }
  try {
    return read_image(entry.image_path);
  } catch (const IoFailure& e) {
    result.issues.push_back(
        {IssueKind::kUnreadable, entry.image_id, e.what()});
    return std::nullopt;
  }
}

WorkResult augment_one_adaptive(const ManifestEntry& entry,
                                const IlluminantPool& pool,
                                const AugmentOptions& options,
                                const std::filesystem::path& out_root) {
  WorkResult result;
  result.pair.original_id = entry.image_id;
  result.pair.record.source_id = entry.image_id;

  const std::optional<RasterImage> image = load_source(entry, pool, result);
  if (!image.has_value()) {
    return result;
  }

  std::optional<AugmentOutcome> outcome;
  try {
    SelectionConfig config = options.selection;
    outcome = select_and_augment(*image, entry.image_id, pool, config);
    // Optional fallback: widen the distance band stepwise before skipping.
    while (outcome->record.status == AugmentStatus::kNoCandidate &&
           options.widen_tolerance &&
           config.c_tolerance < kMaxWidenedTolerance) {
      config.c_tolerance =
          std::min(config.c_tolerance + kWidenStep, kMaxWidenedTolerance);
      outcome = select_and_augment(*image, entry.image_id, pool, config);
    }
  } catch (const DegenerateImage& e) {
    result.issues.push_back(
        {IssueKind::kDegenerate, entry.image_id, e.what()});
    return result;
  } catch (const DegeneratePool& e) {
    result.issues.push_back(
        {IssueKind::kNoCounterpart, entry.image_id, e.what()});
    return result;
  } catch (const EmptyPool& e) {
    result.issues.push_back(
        {IssueKind::kNoCounterpart, entry.image_id, e.what()});
    return result;
  }

  result.pair.record = outcome->record;
  if (outcome->image.has_value()) {
    const std::string aug_id = augmented_id_for(entry.image_id);
    write_image_png(out_root / (aug_id + ".png"), *outcome->image);
    result.pair.augmented_id = aug_id;
  } else {
    result.issues.push_back({IssueKind::kNoCounterpart, entry.image_id,
                             "no candidate satisfied both conditions"});
  }
  return result;
}

WorkResult augment_one_random(const ManifestEntry& entry,
                              const IlluminantPool& pool,
                              const AugmentOptions& options,
                              const std::filesystem::path& out_root) {
  WorkResult result;
  result.pair.original_id = entry.image_id;
  result.pair.record.source_id = entry.image_id;

  const std::optional<RasterImage> image = load_source(entry, pool, result);
  if (!image.has_value()) {
    return result;
  }

  const IlluminantProfile& beta = pool.find(entry.image_id)->profile;
  std::mt19937_64 rng = per_image_rng(options.seed, entry.image_id);
  const PoolEntry& target = pool.entries()[uniform_index(rng, pool.size())];
  const RasterImage augmented = recast(*image, beta, target.profile);

  AugmentationRecord& record = result.pair.record;
  record.chosen_illuminant_id = target.image_id;
  record.result_saturation =
      rgb_to_hsv_saturation(quantized(augmented)).mean_saturation;
  record.status = AugmentStatus::kAugmented;
  try {
    const PoolEntry alpha = furthest_illuminant(beta, pool, entry.image_id);
    const double max_distance = illuminant_distance(beta, alpha.profile);
    if (max_distance > 0.0) {
      record.distance_ratio =
          illuminant_distance(beta, target.profile) / max_distance;
    }
  } catch (const EmptyPool&) {
    // Pool of one: no reference distance, the ratio stays unset.
  }

  const std::string aug_id = augmented_id_for(entry.image_id);
  write_image_png(out_root / (aug_id + ".png"), augmented);
  result.pair.augmented_id = aug_id;
  return result;
}

AugmentedSetManifest run_batch(const DatasetManifest& manifest,
                               const IlluminantPool& pool,
                               const AugmentOptions& options,
                               const std::filesystem::path& out_root,
                               AugmentPolicy policy) {
  options.selection.validate();
  if (options.workers < 1) {
    throw std::invalid_argument("workers must be at least 1");
  }

  std::unordered_set<std::string> manifest_ids;
  for (const ManifestEntry& entry : manifest.entries()) {
    manifest_ids.insert(entry.image_id);
  }
  for (const PoolEntry& entry : pool.entries()) {
    if (manifest_ids.count(entry.image_id) == 0) {
      throw std::invalid_argument("pool entry '" + entry.image_id +
                                  "' does not belong to the dataset");
    }
  }
  for (const ManifestEntry& entry : manifest.entries()) {
    if (manifest_ids.count(augmented_id_for(entry.image_id)) != 0) {
      throw std::invalid_argument(
          "augmented id '" + augmented_id_for(entry.image_id) +
          "' collides with an existing image id");
    }
  }
  if (policy == AugmentPolicy::kRandom && pool.empty()) {
    throw EmptyPool("the random policy cannot draw from an empty pool");
  }

  std::filesystem::create_directories(out_root);

  const std::vector<ManifestEntry>& entries = manifest.entries();
  std::vector<WorkResult> slots(entries.size());
  parallel_for_index(entries.size(), options.workers, [&](std::size_t i) {
    slots[i] = policy == AugmentPolicy::kAdaptive
                   ? augment_one_adaptive(entries[i], pool, options, out_root)
                   : augment_one_random(entries[i], pool, options, out_root);
  });

  AugmentedSetManifest result;
  result.seed = options.seed;
  result.selection = options.selection;
  result.policy = policy;
  result.widen_tolerance = options.widen_tolerance;
  result.pairs.reserve(slots.size());
  for (WorkResult& slot : slots) {
    result.pairs.push_back(std::move(slot.pair));
    for (PipelineIssue& issue : slot.issues) {
      result.issues.push_back(std::move(issue));
    }
  }
  return result;
}

}  // namespace

AugmentedSetManifest augment_dataset(const DatasetManifest& manifest,
                                     const IlluminantPool& pool,
                                     const AugmentOptions& options,
                                     const std::filesystem::path& out_root) {
  return run_batch(manifest, pool, options, out_root,
                   AugmentPolicy::kAdaptive);
}

AugmentedSetManifest random_policy_augment(
    const DatasetManifest& manifest, const IlluminantPool& pool,
    const AugmentOptions& options, const std::filesystem::path& out_root) {
  return run_batch(manifest, pool, options, out_root, AugmentPolicy::kRandom);
}

void AugmentedSetManifest::save(const std::filesystem::path& path) const {
  json doc;
  json pair_list = json::array();
  for (const AugmentedPair& pair : pairs) {
    json item;
    item["augmented_id"] = opt_json(pair.augmented_id);
    item["chosen_illuminant_id"] = opt_json(pair.record.chosen_illuminant_id);
    item["distance_ratio"] = opt_json(pair.record.distance_ratio);
    item["original_id"] = pair.original_id;
    item["result_saturation"] = opt_json(pair.record.result_saturation);
    item["status"] = std::string(status_name(pair.record.status));
    pair_list.push_back(std::move(item));
  }
  json issue_list = json::array();
  for (const PipelineIssue& issue : issues) {
    json item;
    item["detail"] = issue.detail;
    item["image_id"] = issue.image_id;
    item["kind"] = std::string(issue_kind_name(issue.kind));
    issue_list.push_back(std::move(item));
  }
  doc["issues"] = std::move(issue_list);
  doc["pairs"] = std::move(pair_list);
  doc["policy"] = policy == AugmentPolicy::kAdaptive ? "adaptive" : "random";
  doc["seed"] = seed;
  json sel;
  sel["c_threshold"] = selection.c_threshold;
  sel["c_tolerance"] = selection.c_tolerance;
  sel["saturation_max"] = selection.saturation_max;
  sel["saturation_min"] = selection.saturation_min;
  doc["selection"] = std::move(sel);
  doc["widen_tolerance"] = widen_tolerance;
  write_text_file(path, doc.dump(2) + "\n");
}

AugmentedSetManifest AugmentedSetManifest::load(
    const std::filesystem::path& path) {
  const json doc = read_json_file(path);
  AugmentedSetManifest result;
  try {
    result.seed = doc.at("seed").get<std::uint64_t>();
    const std::string policy_text = doc.at("policy").get<std::string>();
    if (policy_text == "adaptive") {
      result.policy = AugmentPolicy::kAdaptive;
    } else if (policy_text == "random") {
      result.policy = AugmentPolicy::kRandom;
    } else {
      throw IoFailure("unknown policy '" + policy_text + "' in '" +
                      path.string() + "'");
    }
    result.widen_tolerance = doc.value("widen_tolerance", false);
    const json& sel = doc.at("selection");
    result.selection.c_threshold = sel.at("c_threshold").get<double>();
    result.selection.c_tolerance = sel.at("c_tolerance").get<double>();
    result.selection.saturation_max = sel.at("saturation_max").get<double>();
    result.selection.saturation_min = sel.at("saturation_min").get<double>();

    for (const json& item : doc.at("pairs")) {
      AugmentedPair pair;
      pair.original_id = item.at("original_id").get<std::string>();
      pair.record.source_id = pair.original_id;
      if (!item.at("augmented_id").is_null()) {
        pair.augmented_id = item.at("augmented_id").get<std::string>();
      }
      if (!item.at("chosen_illuminant_id").is_null()) {
        pair.record.chosen_illuminant_id =
            item.at("chosen_illuminant_id").get<std::string>();
      }
      if (!item.at("distance_ratio").is_null()) {
        pair.record.distance_ratio = item.at("distance_ratio").get<double>();
      }
      if (!item.at("result_saturation").is_null()) {
        pair.record.result_saturation =
            item.at("result_saturation").get<double>();
      }
      pair.record.status =
          parse_status(item.at("status").get<std::string>(), path);
      result.pairs.push_back(std::move(pair));
    }
    for (const json& item : doc.at("issues")) {
      PipelineIssue issue;
      issue.kind = parse_issue_kind(item.at("kind").get<std::string>(), path);
      issue.image_id = item.at("image_id").get<std::string>();
      issue.detail = item.at("detail").get<std::string>();
      result.issues.push_back(std::move(issue));
    }
  } catch (const json::exception& e) {
    throw IoFailure("malformed augmentation manifest '" + path.string() +
                    "': " + e.what());
  }
  return result;
}

namespace {

std::size_t saturation_bin(double value, int bins) {
  const long index = static_cast<long>(std::floor(value / 255.0 * bins));
  return static_cast<std::size_t>(std::clamp(index, 0L, bins - 1L));
}

}  // namespace

AnalysisExport export_analysis(const std::vector<DatasetManifest>& manifests,
                               int bins, int workers) {
  if (bins < 1) {
    throw std::invalid_argument("bins must be at least 1");
  }
  if (workers < 1) {
    throw std::invalid_argument("workers must be at least 1");
  }

  AnalysisExport result;
  for (const DatasetManifest& manifest : manifests) {
    DatasetAnalysis analysis;
    analysis.dataset = manifest.name();
    analysis.histogram.edges.resize(static_cast<std::size_t>(bins) + 1);
    for (int k = 0; k <= bins; ++k) {
      analysis.histogram.edges[static_cast<std::size_t>(k)] =
          255.0 * k / bins;
    }
    analysis.histogram.counts.assign(static_cast<std::size_t>(bins), 0);

    const std::vector<ManifestEntry>& entries = manifest.entries();
    std::vector<std::optional<ScatterRow>> rows(entries.size());
    std::vector<std::optional<PipelineIssue>> issues(entries.size());
    parallel_for_index(entries.size(), workers, [&](std::size_t i) {
      const ManifestEntry& entry = entries[i];
      try {
        const RasterImage image = read_image(entry.image_path);
        const IlluminantProfile beta = compute_illuminant(image);
        rows[i] = ScatterRow{manifest.name(), entry.image_id, beta.r(),
                             beta.g(), beta.b(),
                             rgb_to_hsv_saturation(image).mean_saturation};
      } catch (const DegenerateImage& e) {
        issues[i] = PipelineIssue{IssueKind::kDegenerate, entry.image_id,
                                  e.what()};
      } catch (const IoFailure& e) {
        issues[i] = PipelineIssue{IssueKind::kUnreadable, entry.image_id,
                                  e.what()};
      }
    });

    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (issues[i].has_value()) {
        result.issues.push_back(std::move(*issues[i]));
      }
      if (!rows[i].has_value()) {
        continue;
      }
      analysis.histogram
          .counts[saturation_bin(rows[i]->mean_saturation, bins)] += 1;
      analysis.image_count += 1;
      result.scatter.push_back(std::move(*rows[i]));
    }
    result.datasets.push_back(std::move(analysis));
  }
  return result;
}

void write_analysis_csv(const AnalysisExport& analysis,
                        const std::filesystem::path& path) {
  std::ostringstream out;
  out << "dataset,image_id,mean_saturation,beta_r,beta_g,beta_b\n";
  for (const ScatterRow& row : analysis.scatter) {
    out << row.dataset << ',' << row.image_id << ','
        << number_text(row.mean_saturation) << ',' << number_text(row.beta_r)
        << ',' << number_text(row.beta_g) << ',' << number_text(row.beta_b)
        << '\n';
  }
  write_text_file(path, out.str());
}

void write_analysis_json(const AnalysisExport& analysis,
                         const std::filesystem::path& path) {
  json doc;
  json datasets = json::array();
  for (const DatasetAnalysis& dataset : analysis.datasets) {
    json item;
    item["histogram"]["counts"] = dataset.histogram.counts;
    item["histogram"]["edges"] = dataset.histogram.edges;
    item["image_count"] = dataset.image_count;
    item["name"] = dataset.dataset;
    datasets.push_back(std::move(item));
  }
  json scatter = json::array();
  for (const ScatterRow& row : analysis.scatter) {
    json item;
    item["beta_b"] = row.beta_b;
    item["beta_g"] = row.beta_g;
    item["beta_r"] = row.beta_r;
    item["dataset"] = row.dataset;
    item["image_id"] = row.image_id;
    item["mean_saturation"] = row.mean_saturation;
    scatter.push_back(std::move(item));
  }
  doc["datasets"] = std::move(datasets);
  doc["scatter"] = std::move(scatter);
  write_text_file(path, doc.dump(2) + "\n");
}

}  // namespace chromaug

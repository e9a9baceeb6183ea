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
#include "cli_app.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chromaug/dataset_pipeline.hpp"
#include "chromaug/errors.hpp"
#include "chromaug/image_io.hpp"
#include "chromaug/mask_tools.hpp"
#include "chromaug/parallel.hpp"
#include "chromaug/rng.hpp"
#include "chromaug/spatial_augment.hpp"

namespace chromaug::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

bool verbose_enabled() {
  const char* value = std::getenv("CHROMAUG_VERBOSE");
  return value != nullptr && *value != '\0' && std::string_view(value) != "0";
}

void report_issues(const std::vector<PipelineIssue>& issues) {
  if (!verbose_enabled()) {
    return;
  }
  for (const PipelineIssue& issue : issues) {
    std::cerr << "[" << issue_kind_name(issue.kind) << "] "
              << (issue.image_id.empty() ? "-" : issue.image_id.c_str())
              << ": " << issue.detail << "\n";
  }
}

void note_issue_count(std::size_t count) {
  if (count != 0) {
    std::cout << count
              << " issue(s); set CHROMAUG_VERBOSE=1 for details\n";
  }
}

/// Shortest decimal form that parses back to the same double.
std::string number_text(double value) { return json(value).dump(); }

void write_text_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoFailure("cannot open '" + path.string() + "' for writing");
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    throw IoFailure("failed writing '" + path.string() + "'");
  }
}

std::pair<double, double> parse_band(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon != std::string::npos) {
    try {
      std::size_t lo_end = 0;
      std::size_t hi_end = 0;
      const std::string lo_text = text.substr(0, colon);
      const std::string hi_text = text.substr(colon + 1);
      const double lo = std::stod(lo_text, &lo_end);
      const double hi = std::stod(hi_text, &hi_end);
      if (lo_end == lo_text.size() && hi_end == hi_text.size()) {
        return {lo, hi};
      }
    } catch (const std::exception&) {
      // fall through to the shared error below
    }
  }
  throw std::invalid_argument("--sat-band expects 'low:high', got '" + text +
                              "'");
}

DatasetManifest resolve_dataset(const std::string& input,
                                const std::string& scan) {
  if (!input.empty() && !scan.empty()) {
    throw std::invalid_argument("use either --input or --scan, not both");
  }
  if (!input.empty()) {
    return DatasetManifest::load(input);
  }
  if (!scan.empty()) {
    return DatasetManifest::scan_directory(scan);
  }
  throw std::invalid_argument("one of --input or --scan is required");
}

// ---------------------------------------------------------------------------
// analyze

int cmd_analyze(const std::vector<std::string>& inputs,
                const std::vector<std::string>& scans, int bins, int workers,
                const std::string& out_dir, bool as_json) {
  std::vector<DatasetManifest> manifests;
  for (const std::string& path : inputs) {
    manifests.push_back(DatasetManifest::load(path));
  }
  for (const std::string& path : scans) {
    manifests.push_back(DatasetManifest::scan_directory(path));
  }
  if (manifests.empty()) {
    throw std::invalid_argument("at least one --input or --scan is required");
  }

  const AnalysisExport analysis = export_analysis(manifests, bins, workers);
  fs::create_directories(out_dir);
  const fs::path csv_path = fs::path(out_dir) / "analysis.csv";
  const fs::path json_path = fs::path(out_dir) / "analysis.json";
  write_analysis_csv(analysis, csv_path);
  write_analysis_json(analysis, json_path);
  report_issues(analysis.issues);

  if (as_json) {
    json report;
    json datasets = json::array();
    for (const DatasetAnalysis& dataset : analysis.datasets) {
      json item;
      item["image_count"] = dataset.image_count;
      item["name"] = dataset.dataset;
      datasets.push_back(std::move(item));
    }
    report["csv"] = csv_path.string();
    report["datasets"] = std::move(datasets);
    report["issue_count"] = analysis.issues.size();
    report["json"] = json_path.string();
    std::cout << report.dump(2) << "\n";
  } else {
    for (const DatasetAnalysis& dataset : analysis.datasets) {
      std::cout << dataset.dataset << ": " << dataset.image_count
                << " image(s) analyzed\n";
    }
    std::cout << "wrote " << csv_path.string() << " and "
              << json_path.string() << "\n";
    note_issue_count(analysis.issues.size());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// augment

int cmd_augment(const std::string& input, const std::string& scan,
                const std::string& out_dir, const AugmentOptions& options,
                const std::string& policy_name, bool as_json) {
  const DatasetManifest manifest = resolve_dataset(input, scan);
  PoolBuildResult pool_result = build_pool(manifest, options.workers);

  AugmentedSetManifest result =
      policy_name == "random"
          ? random_policy_augment(manifest, pool_result.pool, options,
                                  out_dir)
          : augment_dataset(manifest, pool_result.pool, options, out_dir);
  // Keep the pool-building findings (unreadable files, degenerate images)
  // in the saved provenance next to the per-image augmentation outcomes.
  result.issues.insert(result.issues.begin(), pool_result.issues.begin(),
                       pool_result.issues.end());

  const fs::path manifest_path = fs::path(out_dir) / "augmented_manifest.json";
  result.save(manifest_path);
  report_issues(result.issues);

  std::size_t augmented = 0;
  for (const AugmentedPair& pair : result.pairs) {
    if (pair.augmented_id.has_value()) {
      ++augmented;
    }
  }

  if (as_json) {
    json report;
    report["augmented"] = augmented;
    report["issue_count"] = result.issues.size();
    report["manifest"] = manifest_path.string();
    report["skipped"] = result.pairs.size() - augmented;
    report["total"] = result.pairs.size();
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "augmented " << augmented << " of " << result.pairs.size()
              << " image(s), " << (result.pairs.size() - augmented)
              << " skipped\n";
    std::cout << "wrote " << manifest_path.string() << "\n";
    note_issue_count(result.issues.size());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// spatial

int cmd_spatial(const std::string& input, const std::string& scan,
                const std::string& out_dir, std::uint64_t seed, int workers,
                bool as_json) {
  const DatasetManifest manifest = resolve_dataset(input, scan);
  fs::create_directories(out_dir);

  const std::vector<ManifestEntry>& entries = manifest.entries();
  std::vector<json> records(entries.size());
  std::vector<std::optional<PipelineIssue>> issues(entries.size());
  parallel_for_index(entries.size(), workers, [&](std::size_t i) {
    const ManifestEntry& entry = entries[i];
    // Fixed draw order defines the per-image stream: rotation, both
    // flips, then the two translation fractions.
    std::mt19937_64 rng = per_image_rng(seed, entry.image_id);
    SpatialParams params;
    params.rotation_deg = uniform_double(rng, -180.0, 180.0);
    params.flip_h = coin_flip(rng);
    params.flip_v = coin_flip(rng);
    params.translate_x = uniform_double(rng, -0.10, 0.10);
    params.translate_y = uniform_double(rng, -0.10, 0.10);

    try {
      const RasterImage image = read_image(entry.image_path);
      const bool has_mask = entry.mask_path.has_value();
      const BinaryMask mask = has_mask
                                  ? read_mask(*entry.mask_path)
                                  : BinaryMask(image.width(), image.height());
      const auto [out_image, out_mask] = apply_spatial(image, mask, params);

      const std::string image_name = entry.image_id + "_sp.png";
      write_image_png(fs::path(out_dir) / image_name, out_image);
      json record;
      record["flip_h"] = params.flip_h;
      record["flip_v"] = params.flip_v;
      record["image_id"] = entry.image_id;
      record["output"] = image_name;
      record["rotation_deg"] = params.rotation_deg;
      record["translate_x"] = params.translate_x;
      record["translate_y"] = params.translate_y;
      if (has_mask) {
        const std::string mask_name = entry.image_id + "_sp_mask.png";
        write_mask_png(fs::path(out_dir) / mask_name, out_mask);
        record["mask_output"] = mask_name;
      }
      records[i] = std::move(record);
    } catch (const IoFailure& e) {
      issues[i] =
          PipelineIssue{IssueKind::kUnreadable, entry.image_id, e.what()};
    } catch (const DimensionMismatch& e) {
      issues[i] =
          PipelineIssue{IssueKind::kMismatchedPair, entry.image_id, e.what()};
    }
  });

  json doc;
  json images = json::array();
  json issue_list = json::array();
  std::vector<PipelineIssue> flat_issues;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!records[i].is_null()) {
      images.push_back(std::move(records[i]));
    }
    if (issues[i].has_value()) {
      json item;
      item["detail"] = issues[i]->detail;
      item["image_id"] = issues[i]->image_id;
      item["kind"] = std::string(issue_kind_name(issues[i]->kind));
      issue_list.push_back(std::move(item));
      flat_issues.push_back(std::move(*issues[i]));
    }
  }
  const std::size_t transformed = images.size();
  doc["images"] = std::move(images);
  doc["issues"] = std::move(issue_list);
  doc["seed"] = seed;
  const fs::path manifest_path = fs::path(out_dir) / "spatial_manifest.json";
  write_text_file(manifest_path, doc.dump(2) + "\n");
  report_issues(flat_issues);

  if (as_json) {
    json report;
    report["issue_count"] = flat_issues.size();
    report["manifest"] = manifest_path.string();
    report["total"] = entries.size();
    report["transformed"] = transformed;
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "transformed " << transformed << " of " << entries.size()
              << " image(s)\n";
    std::cout << "wrote " << manifest_path.string() << "\n";
    note_issue_count(flat_issues.size());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// postprocess

int cmd_postprocess(const std::string& input, const std::string& scan,
                    const std::string& out_dir, int radius, int workers,
                    bool as_json) {
  const DatasetManifest manifest = resolve_dataset(input, scan);
  fs::create_directories(out_dir);

  const std::vector<ManifestEntry>& entries = manifest.entries();
  // Byte flags, not vector<bool>: workers write adjacent slots in parallel.
  std::vector<unsigned char> done(entries.size(), 0);
  std::vector<std::optional<PipelineIssue>> issues(entries.size());
  parallel_for_index(entries.size(), workers, [&](std::size_t i) {
    const ManifestEntry& entry = entries[i];
    try {
      // A paired mask takes priority; otherwise the entry's image itself
      // is treated as the mask, which covers prediction directories.
      const fs::path source = entry.mask_path.has_value() ? *entry.mask_path
                                                          : entry.image_path;
      const BinaryMask cleaned =
          postprocess_mask(read_mask(source), radius);
      write_mask_png(fs::path(out_dir) / (entry.image_id + "_pp.png"),
                     cleaned);
      done[i] = 1;
    } catch (const IoFailure& e) {
      issues[i] =
          PipelineIssue{IssueKind::kUnreadable, entry.image_id, e.what()};
    }
  });

  std::size_t processed = 0;
  std::vector<PipelineIssue> flat_issues;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    processed += done[i] != 0 ? 1 : 0;
    if (issues[i].has_value()) {
      flat_issues.push_back(std::move(*issues[i]));
    }
  }
  report_issues(flat_issues);

  if (as_json) {
    json report;
    report["issue_count"] = flat_issues.size();
    report["processed"] = processed;
    report["total"] = entries.size();
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "post-processed " << processed << " of " << entries.size()
              << " mask(s) into " << out_dir << "\n";
    note_issue_count(flat_issues.size());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// metrics

constexpr std::string_view kMaskFileExtensions[] = {".bmp", ".jpeg", ".jpg",
                                                    ".png"};

/// Stem with one well-known mask/prediction suffix removed, so files like
/// "X.png", "X_mask.png" and "X_pp.png" all pair up under "X".
std::string normalized_stem(const fs::path& path) {
  const std::string stem = path.stem().string();
  for (std::string_view suffix :
       {"_mask", "_segmentation", "_pred", "_pp", "_sp"}) {
    if (stem.size() > suffix.size() &&
        std::string_view(stem).ends_with(suffix)) {
      return stem.substr(0, stem.size() - suffix.size());
    }
  }
  return stem;
}

std::map<std::string, fs::path> index_masks(const std::string& dir) {
  if (!fs::is_directory(dir)) {
    throw IoFailure("'" + dir + "' is not a directory");
  }
  std::vector<fs::path> files;
  for (const auto& item : fs::directory_iterator(dir)) {
    if (!item.is_regular_file()) {
      continue;
    }
    std::string ext = item.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) {
      return static_cast<char>(std::tolower(c));
    });
    if (std::find(std::begin(kMaskFileExtensions),
                  std::end(kMaskFileExtensions),
                  ext) != std::end(kMaskFileExtensions)) {
      files.push_back(item.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::map<std::string, fs::path> result;
  for (const fs::path& path : files) {
    result.emplace(normalized_stem(path), path);  // first name wins on ties
  }
  return result;
}

json metrics_to_json(const SegMetrics& metrics) {
  json item;
  item["accuracy"] = metrics.accuracy;
  item["dice"] = metrics.dice;
  item["jaccard"] = metrics.jaccard;
  item["sensitivity"] = metrics.sensitivity;
  item["specificity"] = metrics.specificity;
  item["thresholded_jaccard"] = metrics.thresholded_jaccard;
  return item;
}

int cmd_metrics(const std::string& pred_dir, const std::string& truth_dir,
                const std::string& out_dir, bool do_postprocess, int radius,
                int workers, bool as_json) {
  const std::map<std::string, fs::path> preds = index_masks(pred_dir);
  const std::map<std::string, fs::path> truths = index_masks(truth_dir);

  struct PairItem {
    std::string id;
    fs::path pred;
    fs::path truth;
  };
  std::vector<PairItem> pairs;
  for (const auto& [key, path] : preds) {
    if (const auto found = truths.find(key); found != truths.end()) {
      pairs.push_back({key, path, found->second});
    }
  }
  if (pairs.empty()) {
    throw std::invalid_argument(
        "no prediction/reference pairs matched by file stem");
  }

  struct Row {
    std::string id;
    SegMetrics metrics;
  };
  std::vector<std::optional<Row>> rows(pairs.size());
  std::vector<std::optional<PipelineIssue>> issues(pairs.size());
  parallel_for_index(pairs.size(), workers, [&](std::size_t i) {
    try {
      BinaryMask pred = read_mask(pairs[i].pred);
      const BinaryMask truth = read_mask(pairs[i].truth);
      if (do_postprocess) {
        pred = postprocess_mask(pred, radius);
      }
      rows[i] = Row{pairs[i].id, compute_metrics(pred, truth)};
    } catch (const IoFailure& e) {
      issues[i] =
          PipelineIssue{IssueKind::kUnreadable, pairs[i].id, e.what()};
    } catch (const DimensionMismatch& e) {
      issues[i] =
          PipelineIssue{IssueKind::kMismatchedPair, pairs[i].id, e.what()};
    }
  });

  SegMetrics aggregate;
  std::size_t scored = 0;
  std::vector<PipelineIssue> flat_issues;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (issues[i].has_value()) {
      flat_issues.push_back(std::move(*issues[i]));
    }
    if (!rows[i].has_value()) {
      continue;
    }
    const SegMetrics& m = rows[i]->metrics;
    aggregate.jaccard += m.jaccard;
    aggregate.thresholded_jaccard += m.thresholded_jaccard;
    aggregate.dice += m.dice;
    aggregate.accuracy += m.accuracy;
    aggregate.sensitivity += m.sensitivity;
    aggregate.specificity += m.specificity;
    ++scored;
  }
  if (scored == 0) {
    throw IoFailure("no prediction/reference pair could be scored");
  }
  aggregate.jaccard /= static_cast<double>(scored);
  aggregate.thresholded_jaccard /= static_cast<double>(scored);
  aggregate.dice /= static_cast<double>(scored);
  aggregate.accuracy /= static_cast<double>(scored);
  aggregate.sensitivity /= static_cast<double>(scored);
  aggregate.specificity /= static_cast<double>(scored);
  report_issues(flat_issues);

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    std::ostringstream csv;
    csv << "image_id,jaccard,thresholded_jaccard,dice,accuracy,sensitivity,"
           "specificity\n";
    json per_image = json::array();
    for (const std::optional<Row>& row : rows) {
      if (!row.has_value()) {
        continue;
      }
      const SegMetrics& m = row->metrics;
      csv << row->id << ',' << number_text(m.jaccard) << ','
          << number_text(m.thresholded_jaccard) << ',' << number_text(m.dice)
          << ',' << number_text(m.accuracy) << ','
          << number_text(m.sensitivity) << ',' << number_text(m.specificity)
          << '\n';
      json item = metrics_to_json(m);
      item["image_id"] = row->id;
      per_image.push_back(std::move(item));
    }
    write_text_file(fs::path(out_dir) / "metrics.csv", csv.str());
    json doc;
    doc["aggregate"] = metrics_to_json(aggregate);
    doc["pair_count"] = scored;
    doc["per_image"] = std::move(per_image);
    write_text_file(fs::path(out_dir) / "metrics.json", doc.dump(2) + "\n");
  }

  if (as_json) {
    json report;
    report["aggregate"] = metrics_to_json(aggregate);
    report["issue_count"] = flat_issues.size();
    report["pair_count"] = scored;
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "scored " << scored << " pair(s)\n";
    std::cout << "aggregate jaccard " << number_text(aggregate.jaccard)
              << ", thresholded jaccard "
              << number_text(aggregate.thresholded_jaccard) << ", dice "
              << number_text(aggregate.dice) << "\n";
    std::cout << "aggregate accuracy " << number_text(aggregate.accuracy)
              << ", sensitivity " << number_text(aggregate.sensitivity)
              << ", specificity " << number_text(aggregate.specificity)
              << "\n";
    note_issue_count(flat_issues.size());
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{
      "chromaug: color-constancy driven augmentation for segmentation "
      "image datasets"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand(
      "analyze", "Extract illuminant profiles and mean-saturation data");
  std::vector<std::string> an_inputs;
  std::vector<std::string> an_scans;
  std::string an_out;
  int an_bins = 32;
  int an_workers = 1;
  bool an_json = false;
  analyze->add_option("--input", an_inputs,
                      "Dataset manifest JSON file (repeatable)")
      ->check(CLI::ExistingFile);
  analyze->add_option("--scan", an_scans,
                      "Directory to scan for images (repeatable)")
      ->check(CLI::ExistingDirectory);
  analyze->add_option("--out", an_out, "Output directory")->required();
  analyze->add_option("--bins", an_bins, "Histogram bin count over [0, 255]")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  analyze->add_option("--workers", an_workers, "Worker thread count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  analyze->add_flag("--json", an_json, "Print the report as JSON");

  auto* augment = app.add_subcommand(
      "augment", "Produce one regulated color-augmented image per input");
  std::string au_input;
  std::string au_scan;
  std::string au_out;
  std::uint64_t au_seed = 0;
  double au_c = 0.4;
  double au_c_tol = 0.05;
  std::string au_band = "15:115";
  std::string au_policy = "adaptive";
  int au_workers = 1;
  bool au_widen = false;
  bool au_json = false;
  augment->add_option("--input", au_input, "Dataset manifest JSON file")
      ->check(CLI::ExistingFile);
  augment->add_option("--scan", au_scan, "Directory to scan for images")
      ->check(CLI::ExistingDirectory);
  augment->add_option("--out", au_out, "Output directory")->required();
  augment->add_option("--seed", au_seed, "Seed for the random policy")
      ->capture_default_str();
  augment
      ->add_option("--c", au_c,
                   "Target fraction of the maximum illuminant distance")
      ->capture_default_str();
  augment
      ->add_option("--c-tol", au_c_tol,
                   "Accepted half-width around the target fraction")
      ->capture_default_str();
  augment
      ->add_option("--sat-band", au_band,
                   "Accepted mean-saturation range as low:high")
      ->capture_default_str();
  augment->add_option("--policy", au_policy, "Illuminant selection policy")
      ->check(CLI::IsMember({"adaptive", "random"}))
      ->capture_default_str();
  augment->add_option("--workers", au_workers, "Worker thread count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  augment->add_flag(
      "--widen", au_widen,
      "Retry skipped images with the distance band widened stepwise");
  augment->add_flag("--json", au_json, "Print the report as JSON");

  auto* spatial = app.add_subcommand(
      "spatial", "Apply seeded rigid transforms to images and masks");
  std::string sp_input;
  std::string sp_scan;
  std::string sp_out;
  std::uint64_t sp_seed = 0;
  int sp_workers = 1;
  bool sp_json = false;
  spatial->add_option("--input", sp_input, "Dataset manifest JSON file")
      ->check(CLI::ExistingFile);
  spatial->add_option("--scan", sp_scan, "Directory to scan for images")
      ->check(CLI::ExistingDirectory);
  spatial->add_option("--out", sp_out, "Output directory")->required();
  spatial->add_option("--seed", sp_seed, "Seed for the parameter draws")
      ->capture_default_str();
  spatial->add_option("--workers", sp_workers, "Worker thread count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  spatial->add_flag("--json", sp_json, "Print the report as JSON");

  auto* postprocess = app.add_subcommand(
      "postprocess", "Smooth masks and keep the largest component");
  std::string pp_input;
  std::string pp_scan;
  std::string pp_out;
  int pp_radius = 2;
  int pp_workers = 1;
  bool pp_json = false;
  postprocess->add_option("--input", pp_input, "Dataset manifest JSON file")
      ->check(CLI::ExistingFile);
  postprocess
      ->add_option("--scan", pp_scan,
                   "Directory to scan for masks or predictions")
      ->check(CLI::ExistingDirectory);
  postprocess->add_option("--out", pp_out, "Output directory")->required();
  postprocess
      ->add_option("--radius", pp_radius,
                   "Disk radius of the smoothing element, 0 disables")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  postprocess->add_option("--workers", pp_workers, "Worker thread count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  postprocess->add_flag("--json", pp_json, "Print the report as JSON");

  auto* metrics = app.add_subcommand(
      "metrics", "Score predicted masks against reference masks");
  std::string me_pred;
  std::string me_truth;
  std::string me_out;
  bool me_postprocess = false;
  int me_radius = 2;
  int me_workers = 1;
  bool me_json = false;
  metrics->add_option("--pred", me_pred, "Directory of predicted masks")
      ->check(CLI::ExistingDirectory)
      ->required();
  metrics->add_option("--truth", me_truth, "Directory of reference masks")
      ->check(CLI::ExistingDirectory)
      ->required();
  metrics->add_option("--out", me_out,
                      "Optional directory for metrics.csv and metrics.json");
  metrics->add_flag("--postprocess", me_postprocess,
                    "Post-process predictions before scoring");
  metrics
      ->add_option("--radius", me_radius,
                   "Disk radius used with --postprocess")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  metrics->add_option("--workers", me_workers, "Worker thread count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  metrics->add_flag("--json", me_json, "Print the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) {
      return cmd_analyze(an_inputs, an_scans, an_bins, an_workers, an_out,
                         an_json);
    }
    if (*augment) {
      AugmentOptions options;
      options.selection.c_threshold = au_c;
      options.selection.c_tolerance = au_c_tol;
      const auto [sat_min, sat_max] = parse_band(au_band);
      options.selection.saturation_min = sat_min;
      options.selection.saturation_max = sat_max;
      options.seed = au_seed;
      options.workers = au_workers;
      options.widen_tolerance = au_widen;
      return cmd_augment(au_input, au_scan, au_out, options, au_policy,
                         au_json);
    }
    if (*spatial) {
      return cmd_spatial(sp_input, sp_scan, sp_out, sp_seed, sp_workers,
                         sp_json);
    }
    if (*postprocess) {
      return cmd_postprocess(pp_input, pp_scan, pp_out, pp_radius,
                             pp_workers, pp_json);
    }
    if (*metrics) {
      return cmd_metrics(me_pred, me_truth, me_out, me_postprocess,
                         me_radius, me_workers, me_json);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;  // unreachable: a subcommand is required
}

}  // namespace chromaug::cli

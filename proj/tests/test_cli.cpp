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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "chromaug/dataset_pipeline.hpp"
#include "chromaug/image_io.hpp"
#include "chromaug/mask_tools.hpp"
#include "cli_app.hpp"
#include "test_support.hpp"

using namespace chromaug;
using namespace chromaug::testing;

namespace {

/// Runs the command line entry point in-process with stdout captured.
struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::vector<std::string> full = {"chromaug"};
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const std::string& arg : full) {
    argv.push_back(arg.c_str());
  }
  std::ostringstream captured;
  std::streambuf* old_buffer = std::cout.rdbuf(captured.rdbuf());
  CliResult result;
  try {
    result.exit_code =
        cli::run(static_cast<int>(argv.size()), argv.data());
  } catch (...) {
    std::cout.rdbuf(old_buffer);
    throw;
  }
  std::cout.rdbuf(old_buffer);
  result.output = captured.str();
  return result;
}

std::string read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_constant_png(const std::filesystem::path& path, float r, float g,
                        float b) {
  write_image_png(path, constant_image(8, 8, r, g, b));
}

/// Same six-image corpus the pipeline tests hand-verify: "c", "d", "e"
/// and "f" find a regulated counterpart, "a" and "b" are skipped.
std::filesystem::path write_seesaw_dir(const TempDir& tmp) {
  const std::filesystem::path dir = tmp.file("ds");
  std::filesystem::create_directories(dir);
  const std::pair<const char*, int> shifts[] = {
      {"a", 30}, {"b", -30}, {"c", 9}, {"d", -9}, {"e", 100}, {"f", -90}};
  for (const auto& [id, k] : shifts) {
    write_constant_png(dir / (std::string(id) + ".png"),
                       static_cast<float>(150 + k), 150.0f,
                       static_cast<float>(150 - k));
  }
  return dir;
}

}  // namespace

TEST_CASE("usage errors exit with 2 and help with 0") {
  CHECK(run_cli({}).exit_code == 2);
  CHECK(run_cli({"frobnicate"}).exit_code == 2);
  CHECK(run_cli({"augment", "--bogus"}).exit_code == 2);
  CHECK(run_cli({"--help"}).exit_code == 0);
  CHECK(run_cli({"augment", "--help"}).exit_code == 0);
}

TEST_CASE("augment needs an input source and a valid band") {
  TempDir tmp;
  CHECK(run_cli({"augment", "--out", tmp.file("out").string()}).exit_code ==
        2);
  const std::filesystem::path dir = write_seesaw_dir(tmp);
  CHECK(run_cli({"augment", "--scan", dir.string(), "--out",
                 tmp.file("out").string(), "--sat-band", "weird"})
            .exit_code == 2);
  CHECK(run_cli({"augment", "--scan", dir.string(), "--out",
                 tmp.file("out").string(), "--sat-band", "115:15"})
            .exit_code == 2);
  CHECK(run_cli({"augment", "--input", tmp.file("absent.json").string(),
                 "--out", tmp.file("out").string()})
            .exit_code == 2);
}

TEST_CASE("the documented augment invocation works end to end") {
  TempDir tmp;
  const std::filesystem::path dir = write_seesaw_dir(tmp);
  DatasetManifest::scan_directory(dir).save(tmp.file("ds.json"));
  const std::filesystem::path out = tmp.file("out");

  const CliResult result =
      run_cli({"augment", "--input", tmp.file("ds.json").string(), "--out",
               out.string(), "--seed", "7", "--c", "0.4", "--sat-band",
               "15:115"});
  CHECK(result.exit_code == 0);
  CHECK(std::filesystem::exists(out / "augmented_manifest.json"));
  for (const char* id : {"c", "d", "e", "f"}) {
    CHECK(std::filesystem::exists(out / (std::string(id) + "_aug.png")));
  }
  for (const char* id : {"a", "b"}) {
    CHECK_FALSE(std::filesystem::exists(out / (std::string(id) + "_aug.png")));
  }

  const AugmentedSetManifest manifest =
      AugmentedSetManifest::load(out / "augmented_manifest.json");
  CHECK(manifest.seed == 7);
  CHECK(manifest.policy == AugmentPolicy::kAdaptive);
}

TEST_CASE("augment reruns are byte-identical") {
  TempDir tmp;
  const std::filesystem::path dir = write_seesaw_dir(tmp);
  const CliResult first = run_cli({"augment", "--scan", dir.string(), "--out",
                                   tmp.file("o1").string(), "--seed", "3"});
  const CliResult second = run_cli({"augment", "--scan", dir.string(), "--out",
                                    tmp.file("o2").string(), "--seed", "3",
                                    "--workers", "8"});
  REQUIRE(first.exit_code == 0);
  REQUIRE(second.exit_code == 0);
  CHECK(read_file_bytes(tmp.file("o1") / "augmented_manifest.json") ==
        read_file_bytes(tmp.file("o2") / "augmented_manifest.json"));
  for (const char* id : {"c", "e", "f"}) {
    const std::string file = std::string(id) + "_aug.png";
    CHECK(read_file_bytes(tmp.file("o1") / file) ==
          read_file_bytes(tmp.file("o2") / file));
  }
}

TEST_CASE("the random policy emits unregulated recasts") {
  TempDir tmp;
  const std::filesystem::path dir = write_seesaw_dir(tmp);
  const CliResult result =
      run_cli({"augment", "--scan", dir.string(), "--out",
               tmp.file("out").string(), "--seed", "11", "--policy", "random",
               "--json"});
  REQUIRE(result.exit_code == 0);
  const nlohmann::json report = nlohmann::json::parse(result.output);
  CHECK(report["total"] == 6);
  CHECK(report["augmented"] == 6);
  CHECK(report["skipped"] == 0);
  const AugmentedSetManifest manifest = AugmentedSetManifest::load(
      tmp.file("out") / "augmented_manifest.json");
  CHECK(manifest.policy == AugmentPolicy::kRandom);
}

TEST_CASE("augment fails cleanly when the manifest points at nothing") {
  TempDir tmp;
  const std::filesystem::path dir = write_seesaw_dir(tmp);
  DatasetManifest::scan_directory(dir).save(tmp.file("ds.json"));
  std::filesystem::remove(dir / "a.png");
  const CliResult result =
      run_cli({"augment", "--input", tmp.file("ds.json").string(), "--out",
               tmp.file("out").string()});
  CHECK(result.exit_code == 1);
}

TEST_CASE("analyze writes stable csv and json artifacts") {
  TempDir tmp;
  const std::filesystem::path dir = write_seesaw_dir(tmp);
  const std::filesystem::path out = tmp.file("analysis");
  const CliResult result = run_cli({"analyze", "--scan", dir.string(), "--out",
                                    out.string(), "--bins", "8"});
  REQUIRE(result.exit_code == 0);
  REQUIRE(std::filesystem::exists(out / "analysis.csv"));
  REQUIRE(std::filesystem::exists(out / "analysis.json"));

  const CliResult again = run_cli({"analyze", "--scan", dir.string(), "--out",
                                   tmp.file("analysis2").string(), "--bins",
                                   "8"});
  REQUIRE(again.exit_code == 0);
  CHECK(read_file_bytes(out / "analysis.csv") ==
        read_file_bytes(tmp.file("analysis2") / "analysis.csv"));
  CHECK(read_file_bytes(out / "analysis.json") ==
        read_file_bytes(tmp.file("analysis2") / "analysis.json"));

  const CliResult as_json =
      run_cli({"analyze", "--scan", dir.string(), "--out",
               tmp.file("analysis3").string(), "--bins", "8", "--json"});
  REQUIRE(as_json.exit_code == 0);
  const nlohmann::json report = nlohmann::json::parse(as_json.output);
  REQUIRE(report.contains("datasets"));
  CHECK(report["datasets"][0]["image_count"] == 6);
}

TEST_CASE("spatial emits seeded transforms with paired masks") {
  TempDir tmp;
  const std::filesystem::path dir = tmp.file("ds");
  std::filesystem::create_directories(dir);
  write_constant_png(dir / "with.png", 120.0f, 130.0f, 140.0f);
  BinaryMask mask(8, 8);
  for (int y = 2; y <= 5; ++y) {
    for (int x = 2; x <= 5; ++x) {
      mask.set(x, y, true);
    }
  }
  write_mask_png(dir / "with_mask.png", mask);
  write_constant_png(dir / "without.png", 90.0f, 100.0f, 110.0f);

  const std::filesystem::path out = tmp.file("out");
  const CliResult result = run_cli(
      {"spatial", "--scan", dir.string(), "--out", out.string(), "--seed",
       "5"});
  REQUIRE(result.exit_code == 0);
  CHECK(std::filesystem::exists(out / "with_sp.png"));
  CHECK(std::filesystem::exists(out / "with_sp_mask.png"));
  CHECK(std::filesystem::exists(out / "without_sp.png"));
  CHECK_FALSE(std::filesystem::exists(out / "without_sp_mask.png"));
  REQUIRE(std::filesystem::exists(out / "spatial_manifest.json"));

  std::ifstream in(out / "spatial_manifest.json");
  const nlohmann::json doc = nlohmann::json::parse(in);
  CHECK(doc["seed"] == 5);
  REQUIRE(doc["images"].size() == 2);
  const nlohmann::json& first = doc["images"][0];
  CHECK(first["image_id"] == "with");
  CHECK(first.contains("rotation_deg"));
  CHECK(first.contains("flip_h"));
  CHECK(first.contains("translate_x"));
  CHECK(first.contains("mask_output"));
  CHECK_FALSE(doc["images"][1].contains("mask_output"));
  CHECK(read_mask(out / "with_sp_mask.png").pixel_count() == 64);

  // Same seed, fresh directory: identical artifacts.
  const CliResult again = run_cli(
      {"spatial", "--scan", dir.string(), "--out", tmp.file("out2").string(),
       "--seed", "5", "--workers", "4"});
  REQUIRE(again.exit_code == 0);
  CHECK(read_file_bytes(out / "with_sp.png") ==
        read_file_bytes(tmp.file("out2") / "with_sp.png"));
  CHECK(read_file_bytes(out / "spatial_manifest.json") ==
        read_file_bytes(tmp.file("out2") / "spatial_manifest.json"));

  // A different seed draws different parameters.
  const CliResult other = run_cli(
      {"spatial", "--scan", dir.string(), "--out", tmp.file("out3").string(),
       "--seed", "6"});
  REQUIRE(other.exit_code == 0);
  CHECK(read_file_bytes(out / "spatial_manifest.json") !=
        read_file_bytes(tmp.file("out3") / "spatial_manifest.json"));
}

TEST_CASE("postprocess cleans masks through the pipeline") {
  TempDir tmp;
  const std::filesystem::path dir = tmp.file("ds");
  std::filesystem::create_directories(dir);
  write_constant_png(dir / "a.png", 120.0f, 130.0f, 140.0f);
  BinaryMask mask(12, 12);
  for (int y = 2; y <= 6; ++y) {
    for (int x = 2; x <= 6; ++x) {
      mask.set(x, y, true);
    }
  }
  mask.set(10, 10, true);  // speck
  write_mask_png(dir / "a_mask.png", mask);

  const std::filesystem::path out = tmp.file("out");
  const CliResult result =
      run_cli({"postprocess", "--scan", dir.string(), "--out", out.string(),
               "--radius", "0"});
  REQUIRE(result.exit_code == 0);
  REQUIRE(std::filesystem::exists(out / "a_pp.png"));
  CHECK(read_mask(out / "a_pp.png") == largest_component_bfs(mask));
}

TEST_CASE("metrics on identical directories scores perfect agreement") {
  TempDir tmp;
  std::filesystem::create_directories(tmp.file("p"));
  std::filesystem::create_directories(tmp.file("t"));
  std::mt19937_64 rng(61);
  for (int i = 0; i < 3; ++i) {
    const BinaryMask mask = random_mask(rng, 10, 10);
    const std::string name = "m" + std::to_string(i) + ".png";
    write_mask_png(tmp.file("p") / name, mask);
    write_mask_png(tmp.file("t") / name, mask);
  }
  const CliResult result =
      run_cli({"metrics", "--pred", tmp.file("p").string(), "--truth",
               tmp.file("t").string(), "--json"});
  REQUIRE(result.exit_code == 0);
  const nlohmann::json report = nlohmann::json::parse(result.output);
  CHECK(report["pair_count"] == 3);
  CHECK(report["aggregate"]["jaccard"].get<double>() == 1.0);
  CHECK(report["aggregate"]["dice"].get<double>() == 1.0);
}

TEST_CASE("metrics pairs files across naming suffixes and writes reports") {
  TempDir tmp;
  std::filesystem::create_directories(tmp.file("p"));
  std::filesystem::create_directories(tmp.file("t"));
  // Crossing rectangles: jaccard 1/3 exactly.
  BinaryMask truth(4, 4);
  BinaryMask pred(4, 4);
  for (int y = 0; y < 4; ++y) {
    truth.set(0, y, true);
    truth.set(1, y, true);
  }
  for (int x = 0; x < 4; ++x) {
    pred.set(x, 0, true);
    pred.set(x, 1, true);
  }
  write_mask_png(tmp.file("p") / "case1_pred.png", pred);
  write_mask_png(tmp.file("t") / "case1_mask.png", truth);

  const std::filesystem::path out = tmp.file("scores");
  const CliResult result =
      run_cli({"metrics", "--pred", tmp.file("p").string(), "--truth",
               tmp.file("t").string(), "--out", out.string()});
  REQUIRE(result.exit_code == 0);
  REQUIRE(std::filesystem::exists(out / "metrics.csv"));
  REQUIRE(std::filesystem::exists(out / "metrics.json"));

  std::ifstream in(out / "metrics.json");
  const nlohmann::json doc = nlohmann::json::parse(in);
  CHECK(doc["pair_count"] == 1);
  CHECK(doc["aggregate"]["jaccard"].get<double>() == 4.0 / 12.0);
  REQUIRE(doc["per_image"].size() == 1);
  CHECK(doc["per_image"][0]["image_id"] == "case1");

  std::ifstream csv(out / "metrics.csv");
  std::string header;
  REQUIRE(std::getline(csv, header));
  CHECK(header ==
        "image_id,jaccard,thresholded_jaccard,dice,accuracy,sensitivity,"
        "specificity");
  std::string row;
  REQUIRE(std::getline(csv, row));
  CHECK(row.rfind("case1,", 0) == 0);
}

TEST_CASE("metrics without any matching pair is a usage error") {
  TempDir tmp;
  std::filesystem::create_directories(tmp.file("p"));
  std::filesystem::create_directories(tmp.file("t"));
  write_mask_png(tmp.file("p") / "only_here.png", BinaryMask(4, 4));
  write_mask_png(tmp.file("t") / "only_there.png", BinaryMask(4, 4));
  CHECK(run_cli({"metrics", "--pred", tmp.file("p").string(), "--truth",
                 tmp.file("t").string()})
            .exit_code == 2);
  CHECK(run_cli({"metrics", "--pred", tmp.file("missing").string(), "--truth",
                 tmp.file("t").string()})
            .exit_code == 2);
}

TEST_CASE("metrics can postprocess predictions before scoring") {
  TempDir tmp;
  std::filesystem::create_directories(tmp.file("p"));
  std::filesystem::create_directories(tmp.file("t"));
  // Truth: the blob alone. Prediction: blob plus a distant speck, which
  // post-processing removes, lifting jaccard to 1.
  BinaryMask blob(12, 12);
  for (int y = 2; y <= 6; ++y) {
    for (int x = 2; x <= 6; ++x) {
      blob.set(x, y, true);
    }
  }
  BinaryMask noisy = blob;
  noisy.set(10, 10, true);
  write_mask_png(tmp.file("p") / "s.png", noisy);
  write_mask_png(tmp.file("t") / "s.png", blob);

  const CliResult raw =
      run_cli({"metrics", "--pred", tmp.file("p").string(), "--truth",
               tmp.file("t").string(), "--json"});
  REQUIRE(raw.exit_code == 0);
  CHECK(nlohmann::json::parse(raw.output)["aggregate"]["jaccard"]
            .get<double>() < 1.0);

  const CliResult cleaned =
      run_cli({"metrics", "--pred", tmp.file("p").string(), "--truth",
               tmp.file("t").string(), "--postprocess", "--radius", "0",
               "--json"});
  REQUIRE(cleaned.exit_code == 0);
  CHECK(nlohmann::json::parse(cleaned.output)["aggregate"]["jaccard"]
            .get<double>() == 1.0);
}

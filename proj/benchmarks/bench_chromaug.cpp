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

#include <benchmark/benchmark.h>

#include <random>

#include "chromaug/color_math.hpp"
#include "chromaug/image.hpp"
#include "chromaug/mask_tools.hpp"
#include "chromaug/spatial_augment.hpp"

namespace {

chromaug::RasterImage make_image(int width, int height) {
  std::mt19937_64 rng(42);
  chromaug::RasterImage image(width, height);
  for (float& value : image.values()) {
    value = static_cast<float>(rng() % 256);
  }
  return image;
}

chromaug::BinaryMask make_mask(int width, int height) {
  std::mt19937_64 rng(43);
  chromaug::BinaryMask mask(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      mask.set(x, y, (rng() & 3) != 0);
    }
  }
  return mask;
}

void BM_ComputeIlluminant(benchmark::State& state) {
  const auto image = make_image(static_cast<int>(state.range(0)),
                                static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(chromaug::compute_illuminant(image));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(image.pixel_count()));
}
BENCHMARK(BM_ComputeIlluminant)->Arg(64)->Arg(256)->Arg(512);

void BM_Recast(benchmark::State& state) {
  const auto image = make_image(static_cast<int>(state.range(0)),
                                static_cast<int>(state.range(0)));
  const auto beta = chromaug::compute_illuminant(image);
  const chromaug::IlluminantProfile gamma(1.08, 1.0, 0.92);
  for (auto _ : state) {
    benchmark::DoNotOptimize(chromaug::recast(image, beta, gamma));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(image.pixel_count()));
}
BENCHMARK(BM_Recast)->Arg(64)->Arg(256)->Arg(512);

void BM_Saturation(benchmark::State& state) {
  const auto image = make_image(static_cast<int>(state.range(0)),
                                static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(chromaug::rgb_to_hsv_saturation(image));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(image.pixel_count()));
}
BENCHMARK(BM_Saturation)->Arg(64)->Arg(256)->Arg(512);

void BM_ApplySpatial(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const auto image = make_image(side, side);
  const auto mask = make_mask(side, side);
  chromaug::SpatialParams params;
  params.rotation_deg = 37.5;
  params.translate_x = 0.05;
  params.translate_y = -0.05;
  params.flip_h = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(chromaug::apply_spatial(image, mask, params));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(image.pixel_count()));
}
BENCHMARK(BM_ApplySpatial)->Arg(64)->Arg(256)->Arg(512);

void BM_PostprocessMask(benchmark::State& state) {
  const auto mask = make_mask(256, 256);
  const int radius = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(chromaug::postprocess_mask(mask, radius));
  }
}
BENCHMARK(BM_PostprocessMask)->Arg(0)->Arg(1)->Arg(3);

}  // namespace

BENCHMARK_MAIN();

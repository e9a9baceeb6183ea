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
#ifndef CHROMAUG_IMAGE_HPP_
#define CHROMAUG_IMAGE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace chromaug {

/// Three-channel raster with floating point intensities, interleaved RGB,
/// row major. Nominal range is [0, 255]; intermediates (white balanced
/// images) may exceed it, stored values must stay finite and non-negative.
class RasterImage {
 public:
  static constexpr int kChannels = 3;
  static constexpr float kNominalMax = 255.0f;

  RasterImage(int width, int height)
      : width_(width), height_(height) {
    if (width < 1 || height < 1) {
      throw std::invalid_argument("RasterImage dimensions must be >= 1");
    }
    data_.assign(static_cast<std::size_t>(width) * height * kChannels, 0.0f);
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width_) * height_;
  }

  float& at(int x, int y, int c) {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * kChannels + c];
  }
  float at(int x, int y, int c) const {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * kChannels + c];
  }

  std::span<float> values() { return data_; }
  std::span<const float> values() const { return data_; }

  bool same_size(const RasterImage& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  bool operator==(const RasterImage& other) const = default;

 private:
  int width_;
  int height_;
  std::vector<float> data_;
};

/// Per-pixel boolean lesion/background map paired with a RasterImage.
class BinaryMask {
 public:
  BinaryMask(int width, int height)
      : width_(width), height_(height) {
    if (width < 1 || height < 1) {
      throw std::invalid_argument("BinaryMask dimensions must be >= 1");
    }
    data_.assign(static_cast<std::size_t>(width) * height, 0);
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width_) * height_;
  }

  bool at(int x, int y) const {
    return data_[static_cast<std::size_t>(y) * width_ + x] != 0;
  }
  void set(int x, int y, bool v) {
    data_[static_cast<std::size_t>(y) * width_ + x] = v ? 1 : 0;
  }

  std::size_t area() const {
    return static_cast<std::size_t>(
        std::count(data_.begin(), data_.end(), std::uint8_t{1}));
  }

  std::span<const std::uint8_t> values() const { return data_; }

  bool operator==(const BinaryMask& other) const = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> data_;
};

/// 8-bit quantization used everywhere a float intensity meets a file:
/// clamp to [0, 255], round half away from zero.
inline std::uint8_t quantize_u8(float v) {
  const float clamped = std::clamp(v, 0.0f, RasterImage::kNominalMax);
  return static_cast<std::uint8_t>(std::lround(clamped));
}

/// Image with every channel quantized to its 8-bit value (still stored as
/// floats). The augmentation gate measures saturation on this
/// representation so that on-disk re-verification matches bit for bit.
inline RasterImage quantized(const RasterImage& image) {
  RasterImage out(image.width(), image.height());
  auto src = image.values();
  auto dst = out.values();
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[i] = static_cast<float>(quantize_u8(src[i]));
  }
  return out;
}

}  // namespace chromaug

#endif  // CHROMAUG_IMAGE_HPP_

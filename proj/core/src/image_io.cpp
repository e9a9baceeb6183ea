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
#include "chromaug/image_io.hpp"

#include <fstream>
#include <vector>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "chromaug/errors.hpp"

namespace chromaug {

namespace {

const std::vector<int> kPngParams = {cv::IMWRITE_PNG_COMPRESSION, 6};

cv::Mat decode_file(const std::filesystem::path& path, int flags) {
  cv::Mat decoded = cv::imread(path.string(), flags);
  if (decoded.empty()) {
    throw IoFailure("cannot read image file: " + path.string());
  }
  return decoded;
}

void write_bytes(const std::filesystem::path& path,
                 const std::vector<unsigned char>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoFailure("cannot open for writing: " + path.string());
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw IoFailure("short write: " + path.string());
  }
}

}  // namespace

RasterImage read_image(const std::filesystem::path& path) {
  const cv::Mat bgr = decode_file(path, cv::IMREAD_COLOR);
  RasterImage image(bgr.cols, bgr.rows);
  for (int y = 0; y < bgr.rows; ++y) {
    const auto* row = bgr.ptr<cv::Vec3b>(y);
    for (int x = 0; x < bgr.cols; ++x) {
      image.at(x, y, 0) = static_cast<float>(row[x][2]);
      image.at(x, y, 1) = static_cast<float>(row[x][1]);
      image.at(x, y, 2) = static_cast<float>(row[x][0]);
    }
  }
  return image;
}

void write_image_png(const std::filesystem::path& path,
                     const RasterImage& image) {
  cv::Mat bgr(image.height(), image.width(), CV_8UC3);
  for (int y = 0; y < image.height(); ++y) {
    auto* row = bgr.ptr<cv::Vec3b>(y);
    for (int x = 0; x < image.width(); ++x) {
      row[x][2] = quantize_u8(image.at(x, y, 0));
      row[x][1] = quantize_u8(image.at(x, y, 1));
      row[x][0] = quantize_u8(image.at(x, y, 2));
    }
  }
  std::vector<unsigned char> bytes;
  if (!cv::imencode(".png", bgr, bytes, kPngParams)) {
    throw IoFailure("PNG encoding failed for: " + path.string());
  }
  write_bytes(path, bytes);
}

BinaryMask read_mask(const std::filesystem::path& path) {
  const cv::Mat gray = decode_file(path, cv::IMREAD_GRAYSCALE);
  BinaryMask mask(gray.cols, gray.rows);
  for (int y = 0; y < gray.rows; ++y) {
    const auto* row = gray.ptr<unsigned char>(y);
    for (int x = 0; x < gray.cols; ++x) {
      mask.set(x, y, row[x] > 127);
    }
  }
  return mask;
}

void write_mask_png(const std::filesystem::path& path,
                    const BinaryMask& mask) {
  cv::Mat gray(mask.height(), mask.width(), CV_8UC1);
  for (int y = 0; y < mask.height(); ++y) {
    auto* row = gray.ptr<unsigned char>(y);
    for (int x = 0; x < mask.width(); ++x) {
      row[x] = mask.at(x, y) ? 255 : 0;
    }
  }
  std::vector<unsigned char> bytes;
  if (!cv::imencode(".png", gray, bytes, kPngParams)) {
    throw IoFailure("PNG encoding failed for: " + path.string());
  }
  write_bytes(path, bytes);
}

}  // namespace chromaug

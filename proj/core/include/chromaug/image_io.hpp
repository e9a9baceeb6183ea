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
#ifndef CHROMAUG_IMAGE_IO_HPP_
#define CHROMAUG_IMAGE_IO_HPP_

#include <filesystem>

#include "chromaug/image.hpp"

namespace chromaug {

/// Decodes an 8-bit color image file into RGB floats. Throws IoFailure.
RasterImage read_image(const std::filesystem::path& path);

/// Quantizes to 8 bits and writes a lossless PNG with fixed encoder
/// settings, so identical pixels always produce identical bytes.
/// Throws IoFailure.
void write_image_png(const std::filesystem::path& path,
                     const RasterImage& image);

/// Reads a grayscale mask file; values above 127 count as foreground.
/// Throws IoFailure.
BinaryMask read_mask(const std::filesystem::path& path);

/// Writes a mask as an 8-bit grayscale PNG (255 foreground, 0 background).
/// Throws IoFailure.
void write_mask_png(const std::filesystem::path& path, const BinaryMask& mask);

}  // namespace chromaug

#endif  // CHROMAUG_IMAGE_IO_HPP_

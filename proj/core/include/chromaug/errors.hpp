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
#ifndef CHROMAUG_ERRORS_HPP_
#define CHROMAUG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace chromaug {

/// Base class for all chromaug error conditions.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input image is all black (or near black): its illuminant is undefined
/// because the defining mean ratio divides by the combined channel mean.
class DegenerateImage : public Error {
 public:
  explicit DegenerateImage(const std::string& what) : Error(what) {}
};

/// No eligible illuminant entry exists for the requested operation.
class EmptyPool : public Error {
 public:
  explicit EmptyPool(const std::string& what) : Error(what) {}
};

/// All pool illuminants coincide, so the distance ratio is undefined.
class DegeneratePool : public Error {
 public:
  explicit DegeneratePool(const std::string& what) : Error(what) {}
};

/// Paired image/mask sizes disagree.
class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

/// A file could not be read, decoded, or written.
class IoFailure : public Error {
 public:
  explicit IoFailure(const std::string& what) : Error(what) {}
};

}  // namespace chromaug

#endif  // CHROMAUG_ERRORS_HPP_

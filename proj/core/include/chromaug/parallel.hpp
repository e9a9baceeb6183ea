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
#ifndef CHROMAUG_PARALLEL_HPP_
#define CHROMAUG_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace chromaug {

/// Runs body(0) .. body(count - 1) on up to `workers` threads. Callers
/// write results into per-index slots, so output never depends on
/// scheduling. The first exception thrown by any item is rethrown after
/// all threads finish.
void parallel_for_index(std::size_t count, int workers,
                        const std::function<void(std::size_t)>& body);

}  // namespace chromaug

#endif  // CHROMAUG_PARALLEL_HPP_

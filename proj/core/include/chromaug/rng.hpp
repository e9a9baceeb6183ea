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
#ifndef CHROMAUG_RNG_HPP_
#define CHROMAUG_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>

namespace chromaug {

inline std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char ch : text) {
    hash ^= ch;
    hash *= 1099511628211ull;
  }
  return hash;
}

/// Stream derived from (run seed, image id), so per-image draws do not
/// depend on worker count or processing order.
inline std::mt19937_64 per_image_rng(std::uint64_t seed,
                                     std::string_view image_id) {
  std::uint64_t state = seed ^ fnv1a64(image_id);
  auto mix = [&state]() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  };
  const std::uint64_t a = mix();
  const std::uint64_t b = mix();
  std::seed_seq seq{
      static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return std::mt19937_64(seq);
}

// The mappings below avoid std::*_distribution, whose output is not
// pinned by the standard; draws must be reproducible from manifests.

inline double uniform_double(std::mt19937_64& rng, double lo, double hi) {
  const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + unit * (hi - lo);
}

inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t count) {
  return static_cast<std::size_t>(rng() % count);
}

inline bool coin_flip(std::mt19937_64& rng) {
  return (rng() >> 32 & 1ull) != 0;
}

}  // namespace chromaug

#endif  // CHROMAUG_RNG_HPP_

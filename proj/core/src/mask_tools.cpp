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
#include "chromaug/mask_tools.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chromaug/errors.hpp"

namespace chromaug {

namespace {

using Offsets = std::vector<std::pair<int, int>>;

Offsets disk_offsets(int radius) {
  Offsets offsets;
  for (int dy = -radius; dy <= radius; ++dy) {
    for (int dx = -radius; dx <= radius; ++dx) {
      if (dx * dx + dy * dy <= radius * radius) {
        offsets.emplace_back(dx, dy);
      }
    }
  }
  return offsets;
}

// Erosion and dilation with the element clipped at the canvas edge, so a
// mask running into the border is not eaten from outside the canvas.
BinaryMask erode(const BinaryMask& mask, const Offsets& offsets) {
  BinaryMask out(mask.width(), mask.height());
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      bool keep = true;
      for (const auto& [dx, dy] : offsets) {
        const int nx = x + dx;
        const int ny = y + dy;
        if (nx < 0 || nx >= mask.width() || ny < 0 || ny >= mask.height()) {
          continue;
        }
        if (!mask.at(nx, ny)) {
          keep = false;
          break;
        }
      }
      out.set(x, y, keep);
    }
  }
  return out;
}

BinaryMask dilate(const BinaryMask& mask, const Offsets& offsets) {
  BinaryMask out(mask.width(), mask.height());
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      bool hit = false;
      for (const auto& [dx, dy] : offsets) {
        const int nx = x + dx;
        const int ny = y + dy;
        if (nx < 0 || nx >= mask.width() || ny < 0 || ny >= mask.height()) {
          continue;
        }
        if (mask.at(nx, ny)) {
          hit = true;
          break;
        }
      }
      out.set(x, y, hit);
    }
  }
  return out;
}

BinaryMask largest_component(const BinaryMask& mask) {
  const int w = mask.width();
  const int h = mask.height();
  std::vector<int> label(static_cast<std::size_t>(w) * h, -1);
  std::vector<std::size_t> sizes;
  std::vector<std::pair<int, int>> stack;

  // Scanning row major means component indices are ordered by their
  // topmost-leftmost pixel, which settles size ties deterministically.
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask.at(x, y) || label[static_cast<std::size_t>(y) * w + x] >= 0) {
        continue;
      }
      const int id = static_cast<int>(sizes.size());
      std::size_t size = 0;
      stack.push_back({x, y});
      label[static_cast<std::size_t>(y) * w + x] = id;
      while (!stack.empty()) {
        const auto [cx, cy] = stack.back();
        stack.pop_back();
        ++size;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            const int nx = cx + dx;
            const int ny = cy + dy;
            if (nx < 0 || nx >= w || ny < 0 || ny >= h) {
              continue;
            }
            std::size_t idx = static_cast<std::size_t>(ny) * w + nx;
            if (mask.at(nx, ny) && label[idx] < 0) {
              label[idx] = id;
              stack.push_back({nx, ny});
            }
          }
        }
      }
      sizes.push_back(size);
    }
  }

  BinaryMask out(w, h);
  if (sizes.empty()) {
    return out;
  }
  int best = 0;
  for (int id = 1; id < static_cast<int>(sizes.size()); ++id) {
    if (sizes[id] > sizes[best]) {
      best = id;
    }
  }
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      out.set(x, y, label[static_cast<std::size_t>(y) * w + x] == best);
    }
  }
  return out;
}

}  // namespace

BinaryMask postprocess_mask(const BinaryMask& mask, int smooth_radius) {
  if (smooth_radius < 0) {
    throw std::invalid_argument("smooth_radius must be >= 0");
  }
  const Offsets offsets = disk_offsets(smooth_radius);
  const auto pass = [&offsets](const BinaryMask& m) {
    const BinaryMask opened = dilate(erode(m, offsets), offsets);
    const BinaryMask smoothed = erode(dilate(opened, offsets), offsets);
    return largest_component(smoothed);
  };

  // One pass is not idempotent: extracting a component exposes a shape
  // the next smoothing round can still change. Iterate to a fixed point
  // (masks form a finite space, so the trajectory must repeat; in the
  // measure-zero event of a proper cycle, return its lexicographically
  // smallest member, on which every cycle entry point agrees).
  std::vector<BinaryMask> trajectory{mask};
  while (true) {
    BinaryMask next = pass(trajectory.back());
    if (next == trajectory.back()) {
      return next;
    }
    for (std::size_t i = 0; i + 1 < trajectory.size(); ++i) {
      if (next == trajectory[i]) {
        const BinaryMask* smallest = &next;
        for (std::size_t j = i + 1; j < trajectory.size(); ++j) {
          const auto a = trajectory[j].values();
          const auto b = smallest->values();
          if (std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                           b.end())) {
            smallest = &trajectory[j];
          }
        }
        return *smallest;
      }
    }
    trajectory.push_back(std::move(next));
  }
}

SegMetrics compute_metrics(const BinaryMask& pred, const BinaryMask& truth) {
  if (pred.width() != truth.width() || pred.height() != truth.height()) {
    throw DimensionMismatch("prediction and reference mask sizes differ");
  }
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;
  for (int y = 0; y < pred.height(); ++y) {
    for (int x = 0; x < pred.width(); ++x) {
      const bool p = pred.at(x, y);
      const bool t = truth.at(x, y);
      if (p && t) {
        ++tp;
      } else if (p && !t) {
        ++fp;
      } else if (!p && t) {
        ++fn;
      } else {
        ++tn;
      }
    }
  }
  const double total = static_cast<double>(tp + fp + fn + tn);

  SegMetrics m;
  m.jaccard = (tp + fp + fn) == 0
                  ? 1.0
                  : static_cast<double>(tp) / static_cast<double>(tp + fp + fn);
  m.dice = (2 * tp + fp + fn) == 0
               ? 1.0
               : static_cast<double>(2 * tp) /
                     static_cast<double>(2 * tp + fp + fn);
  m.accuracy = static_cast<double>(tp + tn) / total;
  m.sensitivity = (tp + fn) == 0
                      ? 1.0
                      : static_cast<double>(tp) / static_cast<double>(tp + fn);
  m.specificity = (tn + fp) == 0
                      ? 1.0
                      : static_cast<double>(tn) / static_cast<double>(tn + fp);
  m.thresholded_jaccard = m.jaccard > 0.65 ? m.jaccard : 0.0;
  return m;
}

}  // namespace chromaug

// Copyright 2026 The corfl Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CORFL_DESCRIPTORS_HPP_
#define CORFL_DESCRIPTORS_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "corfl/matrix.hpp"

namespace corfl {

// A bag of p-dimensional descriptors stored contiguously. An empty set has
// dim() == 0 until the first vector is added.
class DescriptorSet {
 public:
  DescriptorSet() = default;
  explicit DescriptorSet(std::size_t dim) : dim_(dim) {}
  // `values` holds count * dim numbers, row-major.
  DescriptorSet(std::size_t dim, std::vector<double> values);

  std::size_t size() const noexcept {
    return dim_ == 0 ? 0 : values_.size() / dim_;
  }
  bool empty() const noexcept { return values_.empty(); }
  std::size_t dim() const noexcept { return dim_; }

  std::span<const double> operator[](Index i) const {
    return {values_.data() + i * dim_, dim_};
  }
  const std::vector<double>& values() const noexcept { return values_; }

  void Add(std::span<const double> vector);
  // Multiset union.
  void Append(const DescriptorSet& other);

  friend bool operator==(const DescriptorSet&, const DescriptorSet&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> values_;
};

inline double SquaredDistance(std::span<const double> a,
                              std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    sum += d * d;
  }
  return sum;
}

// Pixel-space window (x0, y0, w, h).
struct Rect {
  int x0 = 0;
  int y0 = 0;
  int w = 0;
  int h = 0;

  double center_x() const { return x0 + 0.5 * w; }
  double center_y() const { return y0 + 0.5 * h; }

  friend bool operator==(const Rect&, const Rect&) = default;
};

// Pyramid levels 2x2, 3x3, 4x4 give 29 cells per receptive field.
inline constexpr std::array<int, 3> kPyramidLevels = {2, 3, 4};
inline constexpr std::size_t kNumCells = 4 + 9 + 16;

// Offset of the first cell of pyramid level `level` (0, 1 or 2).
constexpr std::size_t LevelOffset(std::size_t level) {
  std::size_t offset = 0;
  for (std::size_t l = 0; l < level; ++l) {
    offset += static_cast<std::size_t>(kPyramidLevels[l] * kPyramidLevels[l]);
  }
  return offset;
}

// Cells are ordered [2x2 row-major | 3x3 row-major | 4x4 row-major].
struct ReceptiveField {
  Rect window;
  std::array<DescriptorSet, kNumCells> cells;

  // Number of descriptors inside the window (counted once).
  std::size_t descriptor_count() const;
  bool empty() const { return descriptor_count() == 0; }
};

}  // namespace corfl

#endif  // CORFL_DESCRIPTORS_HPP_

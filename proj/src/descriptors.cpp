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

#include "corfl/descriptors.hpp"

#include <string>

#include "corfl/error.hpp"

namespace corfl {

DescriptorSet::DescriptorSet(std::size_t dim, std::vector<double> values)
    : dim_(dim), values_(std::move(values)) {
  if (dim_ == 0 ? !values_.empty() : values_.size() % dim_ != 0) {
    throw Error(ErrorCode::kDimensionMismatch,
                "value count is not a multiple of the dimension");
  }
}

void DescriptorSet::Add(std::span<const double> vector) {
  if (vector.empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "empty descriptor vector");
  }
  if (dim_ == 0) dim_ = vector.size();
  if (vector.size() != dim_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected dimension " + std::to_string(dim_) + ", got " +
                    std::to_string(vector.size()));
  }
  values_.insert(values_.end(), vector.begin(), vector.end());
}

void DescriptorSet::Append(const DescriptorSet& other) {
  if (other.empty()) return;
  if (dim_ == 0) dim_ = other.dim_;
  if (other.dim_ != dim_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected dimension " + std::to_string(dim_) + ", got " +
                    std::to_string(other.dim_));
  }
  values_.insert(values_.end(), other.values_.begin(), other.values_.end());
}

std::size_t ReceptiveField::descriptor_count() const {
  // Level 0 (2x2) partitions the window's descriptors.
  std::size_t n = 0;
  for (std::size_t l = 0; l < LevelOffset(1); ++l) n += cells[l].size();
  return n;
}

}  // namespace corfl

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

#ifndef CORFL_KDTREE_HPP_
#define CORFL_KDTREE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "corfl/descriptors.hpp"

namespace corfl {

// Exact nearest-neighbour index over a DescriptorSet. Query results are the
// same doubles a brute-force scan would produce: distances are computed with
// SquaredDistance over full vectors and pruning only skips subtrees that
// cannot contain a strictly closer point.
class KdTree {
 public:
  KdTree() = default;
  explicit KdTree(const DescriptorSet& points, std::size_t leaf_size = 8);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }

  // Smallest squared distance from `query` to any indexed point.
  double NearestSquaredDistance(std::span<const double> query) const;

 private:
  struct Node {
    // Leaves hold [begin, end) of order_; inner nodes split on `dim` at
    // `value` with children left/right.
    std::uint32_t begin = 0;
    std::uint32_t end = 0;
    std::int32_t left = -1;
    std::int32_t right = -1;
    std::uint32_t dim = 0;
    double value = 0.0;
  };

  std::int32_t Build(std::uint32_t begin, std::uint32_t end);
  void Search(std::int32_t node, std::span<const double> query,
              double& best) const;

  DescriptorSet points_;
  std::vector<std::uint32_t> order_;
  std::vector<Node> nodes_;
  std::size_t leaf_size_ = 8;
};

// Brute-force reference with the same contract as KdTree.
double BruteForceNearestSquaredDistance(const DescriptorSet& points,
                                        std::span<const double> query);

}  // namespace corfl

#endif  // CORFL_KDTREE_HPP_

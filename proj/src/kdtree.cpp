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

#include "corfl/kdtree.hpp"

#include <algorithm>
#include <limits>

#include "corfl/error.hpp"

namespace corfl {

KdTree::KdTree(const DescriptorSet& points, std::size_t leaf_size)
    : points_(points), leaf_size_(std::max<std::size_t>(leaf_size, 1)) {
  order_.resize(points_.size());
  for (std::uint32_t i = 0; i < order_.size(); ++i) order_[i] = i;
  if (!order_.empty()) {
    Build(0, static_cast<std::uint32_t>(order_.size()));
  }
}

std::int32_t KdTree::Build(std::uint32_t begin, std::uint32_t end) {
  const auto id = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back({begin, end});
  if (end - begin <= leaf_size_) return id;

  // Split on the dimension of largest spread.
  const std::size_t dim = points_.dim();
  std::uint32_t best_dim = 0;
  double best_spread = -1.0;
  for (std::uint32_t k = 0; k < dim; ++k) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::uint32_t n = begin; n < end; ++n) {
      const double v = points_[order_[n]][k];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (hi - lo > best_spread) {
      best_spread = hi - lo;
      best_dim = k;
    }
  }
  if (best_spread <= 0.0) return id;  // all points coincide

  const std::uint32_t mid = begin + (end - begin) / 2;
  std::nth_element(order_.begin() + begin, order_.begin() + mid,
                   order_.begin() + end, [&](std::uint32_t a, std::uint32_t b) {
                     return points_[a][best_dim] < points_[b][best_dim];
                   });
  const double split = points_[order_[mid]][best_dim];
  const std::int32_t left = Build(begin, mid);
  const std::int32_t right = Build(mid, end);
  nodes_[id].left = left;
  nodes_[id].right = right;
  nodes_[id].dim = best_dim;
  nodes_[id].value = split;
  return id;
}

void KdTree::Search(std::int32_t node_id, std::span<const double> query,
                    double& best) const {
  const Node& node = nodes_[node_id];
  if (node.left < 0) {
    for (std::uint32_t n = node.begin; n < node.end; ++n) {
      best = std::min(best, SquaredDistance(query, points_[order_[n]]));
    }
    return;
  }
  // Left child holds values <= split, right child values >= split.
  const double diff = query[node.dim] - node.value;
  const std::int32_t near = diff < 0.0 ? node.left : node.right;
  const std::int32_t far = diff < 0.0 ? node.right : node.left;
  Search(near, query, best);
  if (diff * diff < best) Search(far, query, best);
}

double KdTree::NearestSquaredDistance(std::span<const double> query) const {
  if (empty()) {
    throw Error(ErrorCode::kEmptyPools, "nearest neighbour of an empty set");
  }
  if (query.size() != points_.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "query dimension does not match the index");
  }
  double best = std::numeric_limits<double>::infinity();
  Search(0, query, best);
  return best;
}

double BruteForceNearestSquaredDistance(const DescriptorSet& points,
                                        std::span<const double> query) {
  if (points.empty()) {
    throw Error(ErrorCode::kEmptyPools, "nearest neighbour of an empty set");
  }
  if (query.size() != points.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "query dimension does not match the point set");
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    best = std::min(best, SquaredDistance(query, points[i]));
  }
  return best;
}

}  // namespace corfl

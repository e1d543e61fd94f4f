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

#include "corfl/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "corfl/error.hpp"

namespace corfl {

SquareMatrix::SquareMatrix(std::size_t n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (values_.size() != n * n) {
    throw Error(ErrorCode::kNonSquare,
                "expected " + std::to_string(n * n) + " values, got " +
                    std::to_string(values_.size()));
  }
}

SimilarityGraph::SimilarityGraph(SquareMatrix weights)
    : weights_(std::move(weights)), row_sums_(weights_.size(), 0.0) {
  for (Index i = 0; i < weights_.size(); ++i) {
    double sum = 0.0;
    for (double w : weights_.row(i)) sum += w;
    row_sums_[i] = sum;
    total_ += sum;
  }
}

SimilarityGraph SimilarityGraph::FromDense(SquareMatrix weights) {
  const std::size_t m = weights.size();
  if (m == 0) {
    throw Error(ErrorCode::kNonSquare, "graph must have at least one vertex");
  }
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      const double w = weights(i, j);
      if (!std::isfinite(w) || w < 0.0) {
        throw Error(ErrorCode::kNegativeWeight,
                    "weight (" + std::to_string(i) + "," + std::to_string(j) +
                        ") must be finite and nonnegative");
      }
    }
  }
  for (Index i = 0; i < m; ++i) {
    for (Index j = i + 1; j < m; ++j) {
      const double a = weights(i, j);
      const double b = weights(j, i);
      const double scale = std::max({1.0, std::abs(a), std::abs(b)});
      if (std::abs(a - b) > kSymmetryTolerance * scale) {
        throw Error(ErrorCode::kAsymmetryBeyondTolerance,
                    "weights (" + std::to_string(i) + "," + std::to_string(j) +
                        ") and its transpose differ");
      }
      const double mean = 0.5 * (a + b);
      weights(i, j) = mean;
      weights(j, i) = mean;
    }
  }
  return SimilarityGraph(std::move(weights));
}

SimilarityGraph SimilarityGraph::FromRows(
    const std::vector<std::vector<double>>& rows) {
  const std::size_t m = rows.size();
  std::vector<double> flat;
  flat.reserve(m * m);
  for (const auto& row : rows) {
    if (row.size() != m) {
      throw Error(ErrorCode::kNonSquare,
                  "row of length " + std::to_string(row.size()) +
                      " in a matrix with " + std::to_string(m) + " rows");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return FromDense(SquareMatrix(m, std::move(flat)));
}

GroupIndex::GroupIndex(std::vector<std::uint32_t> group_of,
                       std::size_t num_groups)
    : group_of_(std::move(group_of)), num_groups_(num_groups) {
  std::vector<bool> seen(num_groups_, false);
  for (std::uint32_t g : group_of_) {
    if (g >= num_groups_) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "group " + std::to_string(g) + " outside [0, " +
                      std::to_string(num_groups_) + ")");
    }
    seen[g] = true;
  }
  for (std::size_t g = 0; g < num_groups_; ++g) {
    if (!seen[g]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "group " + std::to_string(g) + " has no candidates");
    }
  }
}

GroupIndex GroupIndex::FromAssignments(std::vector<std::uint32_t> group_of) {
  std::size_t n = 0;
  for (std::uint32_t g : group_of) n = std::max<std::size_t>(n, g + 1);
  return GroupIndex(std::move(group_of), n);
}

GroupIndex GroupIndex::Contiguous(std::size_t num_groups,
                                  std::size_t per_group) {
  std::vector<std::uint32_t> group_of(num_groups * per_group);
  for (std::size_t k = 0; k < group_of.size(); ++k) {
    group_of[k] = static_cast<std::uint32_t>(k / per_group);
  }
  return GroupIndex(std::move(group_of), num_groups);
}

CenterBias::CenterBias(std::vector<double> q) : q_(std::move(q)) {
  for (double v : q_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "center bias weights must lie in [0, 1]");
    }
  }
}

CenterBias CenterBiasFromPositions(std::span<const Point2> rf_centers,
                                   const GroupIndex& groups,
                                   std::span<const ImageSize> image_dims,
                                   double sigma_c) {
  if (!(sigma_c > 0.0)) {
    throw Error(ErrorCode::kNonPositiveSigma, "sigma_c must be positive");
  }
  if (rf_centers.size() != groups.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "one center per candidate is required");
  }
  if (image_dims.size() != groups.num_groups()) {
    throw Error(ErrorCode::kInvalidArgument,
                "one image size per group is required");
  }
  std::vector<double> q(rf_centers.size());
  for (Index k = 0; k < rf_centers.size(); ++k) {
    const ImageSize& dims = image_dims[groups.group_of(k)];
    const Point2& c = rf_centers[k];
    if (!(dims.width > 0.0 && dims.height > 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "image sizes must be positive");
    }
    if (!(c.x >= 0.0 && c.x <= dims.width && c.y >= 0.0 &&
          c.y <= dims.height)) {
      throw Error(ErrorCode::kOutOfBoundsCenter,
                  "candidate " + std::to_string(k) +
                      " has its center outside the image");
    }
    const double half_diag = 0.5 * std::hypot(dims.width, dims.height);
    const double d = std::hypot(c.x - 0.5 * dims.width,
                                c.y - 0.5 * dims.height) /
                     half_diag;
    q[k] = std::exp(-(d * d) / (2.0 * sigma_c * sigma_c));
  }
  return CenterBias(std::move(q));
}

}  // namespace corfl

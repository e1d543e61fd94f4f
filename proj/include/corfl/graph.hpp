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

#ifndef CORFL_GRAPH_HPP_
#define CORFL_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "corfl/matrix.hpp"

namespace corfl {

// Relative tolerance used when checking that an input matrix is symmetric.
inline constexpr double kSymmetryTolerance = 1e-9;

// Undirected similarity graph over receptive-field candidates. Weights are
// stored densely; row sums and the grand total are computed once at
// construction. Immutable after construction.
class SimilarityGraph {
 public:
  // Validates squareness, nonnegativity and symmetry (within
  // kSymmetryTolerance, relative), then stores the averaged matrix so the
  // stored weights are exactly symmetric.
  static SimilarityGraph FromDense(SquareMatrix weights);
  static SimilarityGraph FromRows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return weights_.size(); }
  double weight(Index i, Index j) const { return weights_(i, j); }
  const SquareMatrix& weights() const noexcept { return weights_; }

  double row_sum(Index i) const { return row_sums_[i]; }
  std::span<const double> row_sums() const noexcept { return row_sums_; }
  double total() const noexcept { return total_; }

 private:
  explicit SimilarityGraph(SquareMatrix weights);

  SquareMatrix weights_;
  std::vector<double> row_sums_;
  double total_ = 0.0;
};

// Partition of candidates into source images.
class GroupIndex {
 public:
  GroupIndex() = default;
  // Every value in [0, num_groups) must occur at least once.
  GroupIndex(std::vector<std::uint32_t> group_of, std::size_t num_groups);
  // Infers num_groups as max + 1.
  static GroupIndex FromAssignments(std::vector<std::uint32_t> group_of);
  // Candidates laid out contiguously, `per_group` each.
  static GroupIndex Contiguous(std::size_t num_groups, std::size_t per_group);

  std::size_t size() const noexcept { return group_of_.size(); }
  std::size_t num_groups() const noexcept { return num_groups_; }
  std::uint32_t group_of(Index k) const { return group_of_[k]; }
  std::span<const std::uint32_t> assignments() const noexcept {
    return group_of_;
  }

 private:
  std::vector<std::uint32_t> group_of_;
  std::size_t num_groups_ = 0;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

struct ImageSize {
  double width = 0.0;
  double height = 0.0;
};

inline constexpr double kDefaultCenterSigma = 0.5;

// Per-candidate centrality weights q_k in [0, 1].
class CenterBias {
 public:
  CenterBias() = default;
  explicit CenterBias(std::vector<double> q);
  // All-zero weights for problems where the center prior does not apply.
  static CenterBias Zeros(std::size_t m) {
    return CenterBias(std::vector<double>(m, 0.0));
  }

  std::size_t size() const noexcept { return q_.size(); }
  double operator[](Index k) const { return q_[k]; }
  std::span<const double> values() const noexcept { return q_; }

 private:
  std::vector<double> q_;
};

// q_k = exp(-d_k^2 / (2 sigma_c^2)) where d_k is the distance from the
// candidate center to its image center divided by half the image diagonal.
// `image_dims` is indexed by image (groups.group_of(k)).
CenterBias CenterBiasFromPositions(std::span<const Point2> rf_centers,
                                   const GroupIndex& groups,
                                   std::span<const ImageSize> image_dims,
                                   double sigma_c = kDefaultCenterSigma);

}  // namespace corfl

#endif  // CORFL_GRAPH_HPP_

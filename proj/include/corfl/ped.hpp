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

#ifndef CORFL_PED_HPP_
#define CORFL_PED_HPP_

#include <cstddef>
#include <limits>
#include <span>

#include "corfl/descriptors.hpp"
#include "corfl/graph.hpp"
#include "corfl/matrix.hpp"

namespace corfl {

inline constexpr double kDefaultEmptyCellDistance = 1.0;
inline constexpr double kDefaultKernelSigma = 0.3;
inline constexpr double kNoEdge = std::numeric_limits<double>::infinity();

// Symmetric chamfer distance between two descriptor sets:
//   (1/2r) sum_i min_j |x_i - y_j|^2 + (1/2q) sum_j min_i |x_i - y_j|^2.
// Both empty gives 0; exactly one empty gives `empty_distance`.
double SetDistance(const DescriptorSet& x, const DescriptorSet& y,
                   double empty_distance = kDefaultEmptyCellDistance);

// Pyramid-error distance: SetDistance summed over the 29 aligned cells.
double PyramidErrorDistance(const ReceptiveField& a, const ReceptiveField& b,
                            double empty_distance = kDefaultEmptyCellDistance);

// Full pairwise PED matrix. Rows are distributed over `threads` workers
// (0 picks the hardware concurrency); the result does not depend on it. When
// `skip_same_group` is given, distances between candidates of the same group
// are left as kNoEdge (pairwise smoothing discards them anyway).
SquareMatrix PedMatrix(std::span<const ReceptiveField> fields,
                       double empty_distance = kDefaultEmptyCellDistance,
                       unsigned threads = 0,
                       const GroupIndex* skip_same_group = nullptr);

// exp(-distance / (2 sigma^2)).
double Kernelize(double distance, double sigma = kDefaultKernelSigma);

// Divides finite entries by the largest finite entry, then applies
// Kernelize elementwise. Infinite entries (non-edges) become 0; the diagonal
// is set to 1.
SquareMatrix KernelizeMatrix(const SquareMatrix& distances,
                             double sigma = kDefaultKernelSigma);

// Keeps the k largest off-diagonal similarities per row (ties to the smaller
// column), then symmetrizes by elementwise max. Requires 1 <= k < M.
SquareMatrix SparsifyKnn(const SquareMatrix& similarities, std::size_t k);

// Zeroes off-diagonal similarities below `threshold` (inclusive keep).
SquareMatrix SparsifyEps(const SquareMatrix& similarities, double threshold);

// Similarity threshold matching a distance radius under Kernelize.
double SimilarityThreshold(double distance_radius,
                           double sigma = kDefaultKernelSigma);

// Per image pair keeps the `m_keep` smallest cross-image distances and
// replaces the rest with kNoEdge. Off-diagonal entries inside one image
// become kNoEdge. The diagonal is kept.
SquareMatrix PairwiseSmooth(const SquareMatrix& distances,
                            const GroupIndex& groups, std::size_t m_keep = 3);

}  // namespace corfl

#endif  // CORFL_PED_HPP_

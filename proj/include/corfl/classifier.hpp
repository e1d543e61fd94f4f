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

#ifndef CORFL_CLASSIFIER_HPP_
#define CORFL_CLASSIFIER_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "corfl/candidates.hpp"
#include "corfl/descriptors.hpp"
#include "corfl/kdtree.hpp"
#include "corfl/optimizer.hpp"
#include "corfl/ped.hpp"

namespace corfl {

// Per-class, per-cell descriptor pools built from the selected windows.
class ClassPools {
 public:
  void AddClass(std::string name, std::array<DescriptorSet, kNumCells> cells);

  std::size_t num_classes() const noexcept { return names_.size(); }
  const std::string& name(std::size_t c) const { return names_.at(c); }
  const DescriptorSet& pool(std::size_t c, std::size_t cell) const {
    return pools_.at(c)[cell];
  }
  bool class_empty(std::size_t c) const;

  // Builds a KdTree for every nonempty pool. Queries through an index give
  // the same distances as brute force.
  void BuildIndex(std::size_t leaf_size = 8);
  bool indexed() const noexcept { return !trees_.empty(); }
  void DropIndex() { trees_.clear(); }

  // Nearest squared distance from `query` to pool (c, cell), which must be
  // nonempty. Uses the index when present.
  double Nearest(std::size_t c, std::size_t cell,
                 std::span<const double> query) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::array<DescriptorSet, kNumCells>> pools_;
  std::vector<std::array<KdTree, kNumCells>> trees_;
};

// Selected windows of one class: `chosen` indexes into `candidates`.
struct ClassSelection {
  std::string name;
  std::span<const ReceptiveField> candidates;
  std::span<const Index> chosen;
};

// P_l^c is the multiset union of cell l over the class's selected windows.
ClassPools BuildPools(std::span<const ClassSelection> selections);

// sum_l dist_q(X_l || P_l^c), where dist_q(X||P) is the mean over x in X of
// the squared distance to the nearest pool descriptor. Empty X cells add 0;
// a nonempty X cell against an empty pool adds `empty_distance`.
double RfToClass(const ReceptiveField& query, const ClassPools& pools,
                 std::size_t c,
                 double empty_distance = kDefaultEmptyCellDistance);

struct ClassifierParams {
  double lambda2 = 0.0;
  double empty_distance = kDefaultEmptyCellDistance;
  double sigma_c = kDefaultCenterSigma;
  TemplateConfig templates;
};

struct Prediction {
  std::size_t label = 0;
  double score = 0.0;
  std::size_t best_candidate = 0;
  std::vector<double> class_scores;
  std::vector<std::size_t> class_best_candidate;
};

// For each class, min over the query's candidate windows k of
//   RfToClass(RF_k, c) + lambda2 * (1 - q_k);
// the class with the smallest score wins. Windows that contain no
// descriptors are skipped. Ties go to the earlier class, then the earlier
// window.
Prediction Predict(const ImageDescriptors& query, const ClassPools& pools,
                   const ClassifierParams& params = {});

}  // namespace corfl

#endif  // CORFL_CLASSIFIER_HPP_

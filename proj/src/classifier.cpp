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

#include "corfl/classifier.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "corfl/error.hpp"

namespace corfl {

void ClassPools::AddClass(std::string name,
                          std::array<DescriptorSet, kNumCells> cells) {
  std::size_t dim = 0;
  for (const auto& existing : pools_) {
    for (const auto& p : existing) {
      if (!p.empty()) dim = p.dim();
    }
  }
  for (const auto& p : cells) {
    if (p.empty()) continue;
    if (dim != 0 && p.dim() != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "class '" + name + "' has a different descriptor dimension");
    }
    dim = p.dim();
  }
  names_.push_back(std::move(name));
  pools_.push_back(std::move(cells));
  trees_.clear();
}

bool ClassPools::class_empty(std::size_t c) const {
  for (const auto& p : pools_.at(c)) {
    if (!p.empty()) return false;
  }
  return true;
}

void ClassPools::BuildIndex(std::size_t leaf_size) {
  trees_.clear();
  trees_.resize(pools_.size());
  for (std::size_t c = 0; c < pools_.size(); ++c) {
    for (std::size_t l = 0; l < kNumCells; ++l) {
      if (!pools_[c][l].empty()) trees_[c][l] = KdTree(pools_[c][l], leaf_size);
    }
  }
}

double ClassPools::Nearest(std::size_t c, std::size_t cell,
                           std::span<const double> query) const {
  if (indexed()) return trees_.at(c)[cell].NearestSquaredDistance(query);
  return BruteForceNearestSquaredDistance(pools_.at(c)[cell], query);
}

ClassPools BuildPools(std::span<const ClassSelection> selections) {
  ClassPools pools;
  for (const ClassSelection& sel : selections) {
    std::array<DescriptorSet, kNumCells> cells;
    for (Index k : sel.chosen) {
      if (k >= sel.candidates.size()) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "class '" + sel.name + "': selection " +
                        std::to_string(k) + " outside the candidate pool");
      }
      for (std::size_t l = 0; l < kNumCells; ++l) {
        cells[l].Append(sel.candidates[k].cells[l]);
      }
    }
    pools.AddClass(sel.name, std::move(cells));
  }
  return pools;
}

double RfToClass(const ReceptiveField& query, const ClassPools& pools,
                 std::size_t c, double empty_distance) {
  if (c >= pools.num_classes()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "class " + std::to_string(c) + " does not exist");
  }
  double total = 0.0;
  for (std::size_t l = 0; l < kNumCells; ++l) {
    const DescriptorSet& x = query.cells[l];
    if (x.empty()) continue;
    const DescriptorSet& pool = pools.pool(c, l);
    if (pool.empty()) {
      total += empty_distance;
      continue;
    }
    if (pool.dim() != x.dim()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "query and pool descriptor dimensions differ");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) sum += pools.Nearest(c, l, x[i]);
    total += sum / static_cast<double>(x.size());
  }
  return total;
}

Prediction Predict(const ImageDescriptors& query, const ClassPools& pools,
                   const ClassifierParams& params) {
  if (pools.num_classes() == 0) {
    throw Error(ErrorCode::kEmptyPools, "no classes to predict from");
  }
  for (std::size_t c = 0; c < pools.num_classes(); ++c) {
    if (pools.class_empty(c)) {
      throw Error(ErrorCode::kEmptyPools,
                  "class '" + pools.name(c) + "' has no pooled descriptors");
    }
  }
  query.Validate();
  if (query.size() == 0) {
    throw Error(ErrorCode::kNoDescriptors,
                "query '" + query.id + "' has no descriptors");
  }
  const std::vector<Rect> rects =
      MakeTemplates(query.width, query.height, params.templates);
  const CenterBias bias =
      TemplateCenterBias(query.width, query.height, rects, params.sigma_c);

  Prediction out;
  out.class_scores.assign(pools.num_classes(),
                          std::numeric_limits<double>::infinity());
  out.class_best_candidate.assign(pools.num_classes(), 0);
  for (std::size_t k = 0; k < rects.size(); ++k) {
    const ReceptiveField rf = BinDescriptors(query, rects[k]);
    if (rf.empty()) continue;
    const double penalty = params.lambda2 * (1.0 - bias[k]);
    for (std::size_t c = 0; c < pools.num_classes(); ++c) {
      const double score =
          RfToClass(rf, pools, c, params.empty_distance) + penalty;
      if (score < out.class_scores[c]) {
        out.class_scores[c] = score;
        out.class_best_candidate[c] = k;
      }
    }
  }
  for (std::size_t c = 0; c < pools.num_classes(); ++c) {
    if (out.class_scores[c] < out.class_scores[out.label]) out.label = c;
  }
  out.score = out.class_scores[out.label];
  if (!std::isfinite(out.score)) {
    throw Error(ErrorCode::kNoDescriptors,
                "no window of query '" + query.id + "' contains descriptors");
  }
  out.best_candidate = out.class_best_candidate[out.label];
  return out;
}

}  // namespace corfl

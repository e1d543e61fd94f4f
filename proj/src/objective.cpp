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

#include "corfl/objective.hpp"

#include <cmath>
#include <string>

#include "corfl/error.hpp"

namespace corfl {
namespace {

std::vector<bool> MaskOf(std::span<const Index> indices, std::size_t m) {
  std::vector<bool> mask(m, false);
  for (Index i : indices) {
    if (i >= m) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "index " + std::to_string(i) + " outside [0, " +
                      std::to_string(m) + ")");
    }
    if (mask[i]) {
      throw Error(ErrorCode::kDuplicateIndex,
                  "index " + std::to_string(i) + " listed twice");
    }
    mask[i] = true;
  }
  return mask;
}

}  // namespace

void ObjectiveParams::Validate() const {
  if (!(tau > 1.0) || !std::isfinite(tau)) {
    throw Error(ErrorCode::kInvalidArgument, "tau must be finite and > 1");
  }
  if (!(lambda1 >= 0.0) || !std::isfinite(lambda1)) {
    throw Error(ErrorCode::kInvalidArgument, "lambda1 must be >= 0");
  }
  if (!(lambda2 >= 0.0) || !std::isfinite(lambda2)) {
    throw Error(ErrorCode::kInvalidArgument, "lambda2 must be >= 0");
  }
}

double HSum(const SimilarityGraph& graph, std::span<const Index> rows,
            std::span<const Index> cols) {
  const std::size_t m = graph.size();
  for (auto set : {rows, cols}) {
    for (Index i : set) {
      if (i >= m) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "index " + std::to_string(i) + " outside [0, " +
                        std::to_string(m) + ")");
      }
    }
  }
  double sum = 0.0;
  for (Index i : rows) {
    for (Index j : cols) sum += graph.weight(i, j);
  }
  return sum;
}

double EvalHDirect(const SimilarityGraph& graph, const ObjectiveParams& params,
                   std::span<const Index> selected) {
  params.Validate();
  const std::size_t m = graph.size();
  const std::vector<bool> mask = MaskOf(selected, m);
  std::vector<Index> in;
  std::vector<Index> out;
  for (Index i = 0; i < m; ++i) (mask[i] ? in : out).push_back(i);

  const double mu = 1.0 + params.tau * graph.total();
  const double alpha = params.tau - 1.0;
  const double beta = params.tau;
  const double arg = mu + HSum(graph, in, in) - alpha * HSum(graph, in, out) -
                     beta * HSum(graph, out, out);
  if (!(arg > 0.0)) {
    throw Error(ErrorCode::kNonPositiveLogArgument,
                "similarity term argument is not positive");
  }
  return std::log(arg);
}

double EvalHClosed(const ObjectiveParams& params, double rowsum_mass) {
  if (!(rowsum_mass >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "rowsum_mass must be >= 0");
  }
  return std::log1p((params.tau + 1.0) * rowsum_mass);
}

double EvalG(std::span<const int> group_counts) {
  double sum = 0.0;
  for (int c : group_counts) {
    if (c < 0) {
      throw Error(ErrorCode::kInvalidArgument, "group counts must be >= 0");
    }
    sum += std::log1p(static_cast<double>(c));
  }
  return sum;
}

Objective::Objective(const SimilarityGraph& graph, const GroupIndex& groups,
                     const CenterBias& bias, ObjectiveParams params)
    : graph_(&graph), groups_(&groups), bias_(&bias), params_(params) {
  params_.Validate();
  if (groups.size() != graph.size() || bias.size() != graph.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "graph, groups and center bias must cover the same "
                "candidates");
  }
}

SelectionState Objective::EmptyState() const {
  return SelectionState(graph_->size(), groups_->num_groups());
}

SelectionState Objective::StateOf(std::span<const Index> selected) const {
  SelectionState state = EmptyState();
  for (Index a : selected) {
    CheckIndex(a);
    if (state.contains(a)) {
      throw Error(ErrorCode::kDuplicateIndex,
                  "index " + std::to_string(a) + " listed twice");
    }
    Add(state, a);
  }
  return state;
}

double Objective::Evaluate(std::span<const Index> selected) const {
  return Evaluate(StateOf(selected));
}

double Objective::Evaluate(const SelectionState& state) const {
  return EvalHClosed(params_, state.rowsum_mass()) +
         params_.lambda1 * EvalG(state.group_counts()) +
         params_.lambda2 * state.center_mass();
}

double Objective::Gain(const SelectionState& state, Index a) const {
  CheckIndex(a);
  if (state.contains(a)) {
    throw Error(ErrorCode::kAlreadySelected,
                "candidate " + std::to_string(a) + " is already selected");
  }
  const double scale = params_.tau + 1.0;
  const double delta = 1.0 + scale * state.rowsum_mass();
  const double c = state.group_counts()[groups_->group_of(a)];
  return std::log1p(scale * graph_->row_sum(a) / delta) +
         params_.lambda1 * std::log1p(1.0 / (c + 1.0)) +
         params_.lambda2 * (*bias_)[a];
}

void Objective::Add(SelectionState& state, Index a) const {
  CheckIndex(a);
  if (state.contains(a)) {
    throw Error(ErrorCode::kAlreadySelected,
                "candidate " + std::to_string(a) + " is already selected");
  }
  state.selected_.push_back(a);
  state.mask_[a] = true;
  state.rowsum_mass_ += graph_->row_sum(a);
  state.group_counts_[groups_->group_of(a)] += 1;
  state.center_mass_ += (*bias_)[a];
}

void Objective::CheckIndex(Index a) const {
  if (a >= graph_->size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "candidate " + std::to_string(a) + " outside [0, " +
                    std::to_string(graph_->size()) + ")");
  }
}

}  // namespace corfl

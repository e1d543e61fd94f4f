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

#ifndef CORFL_OBJECTIVE_HPP_
#define CORFL_OBJECTIVE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "corfl/graph.hpp"

namespace corfl {

// Parameters of F(A) = H_tau(A) + lambda1 * G(A) + lambda2 * sum_{i in A} q_i.
// The similarity term uses alpha = tau - 1, beta = tau and
// mu = 1 + tau * total(S); none of these are stored.
struct ObjectiveParams {
  double tau = 2.0;
  double lambda1 = 100.0;
  double lambda2 = 0.0;

  // Throws kInvalidArgument unless tau > 1 and both lambdas are >= 0.
  void Validate() const;
};

// Sum of s_ij over i in rows, j in cols. Zero if either set is empty.
double HSum(const SimilarityGraph& graph, std::span<const Index> rows,
            std::span<const Index> cols);

// log(mu + h(A,A) - (tau-1) h(A,~A) - tau h(~A,~A)), evaluated term by term.
// O(M^2); used to cross-check the closed form.
double EvalHDirect(const SimilarityGraph& graph, const ObjectiveParams& params,
                   std::span<const Index> selected);

// log(1 + (tau+1) * rowsum_mass), where rowsum_mass = sum_{i in A} r_i.
double EvalHClosed(const ObjectiveParams& params, double rowsum_mass);

// sum_j log(|A_j| + 1).
double EvalG(std::span<const int> group_counts);

class Objective;

// Incrementally maintained summary of a selection A.
class SelectionState {
 public:
  const std::vector<Index>& selected() const noexcept { return selected_; }
  bool contains(Index k) const { return mask_[k]; }
  std::size_t size() const noexcept { return selected_.size(); }
  double rowsum_mass() const noexcept { return rowsum_mass_; }
  double center_mass() const noexcept { return center_mass_; }
  const std::vector<int>& group_counts() const noexcept {
    return group_counts_;
  }

 private:
  friend class Objective;
  SelectionState(std::size_t num_candidates, std::size_t num_groups)
      : mask_(num_candidates, false), group_counts_(num_groups, 0) {}

  std::vector<Index> selected_;
  std::vector<bool> mask_;
  double rowsum_mass_ = 0.0;
  std::vector<int> group_counts_;
  double center_mass_ = 0.0;
};

// Binds a graph, its group partition and center weights to a parameter set.
// Holds references: the graph, groups and bias must outlive the Objective.
class Objective {
 public:
  Objective(const SimilarityGraph& graph, const GroupIndex& groups,
            const CenterBias& bias, ObjectiveParams params);

  const SimilarityGraph& graph() const noexcept { return *graph_; }
  const GroupIndex& groups() const noexcept { return *groups_; }
  const CenterBias& bias() const noexcept { return *bias_; }
  const ObjectiveParams& params() const noexcept { return params_; }
  std::size_t num_candidates() const noexcept { return graph_->size(); }
  double mu() const noexcept { return 1.0 + params_.tau * graph_->total(); }

  SelectionState EmptyState() const;
  SelectionState StateOf(std::span<const Index> selected) const;

  // F(A) through the closed form of H.
  double Evaluate(std::span<const Index> selected) const;
  double Evaluate(const SelectionState& state) const;

  // F(A + a) - F(A) in O(1):
  //   log(1 + (tau+1) r_a / Delta) + lambda1 log((c+2)/(c+1)) + lambda2 q_a
  // with Delta = 1 + (tau+1) * rowsum_mass and c = |A_{group(a)}|.
  double Gain(const SelectionState& state, Index a) const;

  void Add(SelectionState& state, Index a) const;

 private:
  void CheckIndex(Index a) const;

  const SimilarityGraph* graph_;
  const GroupIndex* groups_;
  const CenterBias* bias_;
  ObjectiveParams params_;
};

}  // namespace corfl

#endif  // CORFL_OBJECTIVE_HPP_

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

#ifndef CORFL_OPTIMIZER_HPP_
#define CORFL_OPTIMIZER_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "corfl/objective.hpp"

namespace corfl {

struct SelectionResult {
  std::vector<Index> chosen;
  std::vector<double> gains;            // marginal gain of each addition
  std::vector<double> objective_trace;  // F after each addition
  std::uint64_t evaluations = 0;        // number of Gain() calls

  friend bool operator==(const SelectionResult&,
                         const SelectionResult&) = default;
};

// Plain greedy: every iteration evaluates all unselected candidates and adds
// the best one, ties going to the smallest index. Requires 1 <= k <= M.
SelectionResult GreedyNaive(const Objective& objective, std::size_t k);

// Lazy greedy over a max-heap of stale gains. Since gains never increase, a
// popped entry whose refreshed gain still beats the new heap top is final.
// Produces the same result as GreedyNaive with fewer evaluations.
SelectionResult GreedyLazy(const Objective& objective, std::size_t k);

}  // namespace corfl

#endif  // CORFL_OPTIMIZER_HPP_

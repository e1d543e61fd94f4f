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

#include "corfl/optimizer.hpp"

#include <queue>
#include <string>

#include "corfl/error.hpp"

namespace corfl {
namespace {

void CheckK(const Objective& objective, std::size_t k) {
  const std::size_t m = objective.num_candidates();
  if (k < 1 || k > m) {
    throw Error(ErrorCode::kKOutOfRange,
                "K=" + std::to_string(k) + " outside [1, " +
                    std::to_string(m) + "]");
  }
}

struct HeapEntry {
  double gain;
  std::size_t updated_at;  // iteration at which `gain` was computed
  Index index;
};

// Orders the heap by gain, then by smaller index.
struct Ranks {
  bool operator()(const HeapEntry& a, const HeapEntry& b) const {
    if (a.gain != b.gain) return a.gain < b.gain;
    return a.index > b.index;
  }
};

void Record(const Objective& objective, SelectionState& state, Index a,
            double gain, SelectionResult& result) {
  objective.Add(state, a);
  result.chosen.push_back(a);
  result.gains.push_back(gain);
  result.objective_trace.push_back(objective.Evaluate(state));
}

}  // namespace

SelectionResult GreedyNaive(const Objective& objective, std::size_t k) {
  CheckK(objective, k);
  const std::size_t m = objective.num_candidates();
  SelectionResult result;
  SelectionState state = objective.EmptyState();
  for (std::size_t t = 0; t < k; ++t) {
    Index best = m;
    double best_gain = 0.0;
    for (Index a = 0; a < m; ++a) {
      if (state.contains(a)) continue;
      const double gain = objective.Gain(state, a);
      ++result.evaluations;
      if (best == m || gain > best_gain) {
        best = a;
        best_gain = gain;
      }
    }
    Record(objective, state, best, best_gain, result);
  }
  return result;
}

SelectionResult GreedyLazy(const Objective& objective, std::size_t k) {
  CheckK(objective, k);
  const std::size_t m = objective.num_candidates();
  SelectionResult result;
  SelectionState state = objective.EmptyState();

  std::vector<HeapEntry> entries;
  entries.reserve(m);
  for (Index a = 0; a < m; ++a) {
    entries.push_back({objective.Gain(state, a), 0, a});
    ++result.evaluations;
  }
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, Ranks> heap(
      Ranks{}, std::move(entries));

  const Ranks ranks;
  for (std::size_t t = 0; t < k; ++t) {
    while (true) {
      HeapEntry top = heap.top();
      heap.pop();
      if (top.updated_at != t) {
        top.gain = objective.Gain(state, top.index);
        top.updated_at = t;
        ++result.evaluations;
        if (!heap.empty() && ranks(top, heap.top())) {
          heap.push(top);
          continue;
        }
      }
      Record(objective, state, top.index, top.gain, result);
      break;
    }
  }
  return result;
}

}  // namespace corfl

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

// Independent reference computations for tests. Nothing here calls the
// closed-form objective or the optimizers.

#ifndef CORFL_TESTS_SUPPORT_ORACLES_HPP_
#define CORFL_TESTS_SUPPORT_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "corfl/graph.hpp"
#include "corfl/objective.hpp"

namespace corfl::testing {

// Symmetric nonnegative matrix with entries in [0, 1]; each off-diagonal
// edge is present with probability `density`.
inline SquareMatrix RandomSimilarity(std::mt19937_64& rng, std::size_t m,
                                     double density = 0.7) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  SquareMatrix s(m, 0.0);
  for (Index i = 0; i < m; ++i) {
    s(i, i) = unit(rng);
    for (Index j = i + 1; j < m; ++j) {
      const double w = unit(rng) < density ? unit(rng) : 0.0;
      s(i, j) = w;
      s(j, i) = w;
    }
  }
  return s;
}

inline std::vector<std::uint32_t> RandomGroups(std::mt19937_64& rng,
                                               std::size_t m,
                                               std::size_t num_groups) {
  // First num_groups candidates cover every group once.
  std::vector<std::uint32_t> g(m);
  std::uniform_int_distribution<std::uint32_t> pick(
      0, static_cast<std::uint32_t>(num_groups - 1));
  for (Index k = 0; k < m; ++k) {
    g[k] = k < num_groups ? static_cast<std::uint32_t>(k) : pick(rng);
  }
  return g;
}

inline std::vector<double> RandomBias(std::mt19937_64& rng, std::size_t m) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> q(m);
  for (double& v : q) v = unit(rng);
  return q;
}

// H from its definition: three block sums, alpha = tau - 1, beta = tau,
// mu = 1 + tau * sum(S).
inline double DirectH(const SquareMatrix& s, double tau,
                      const std::vector<bool>& in) {
  const std::size_t m = s.size();
  double total = 0.0, aa = 0.0, ab = 0.0, bb = 0.0;
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      total += s(i, j);
      if (in[i] && in[j]) aa += s(i, j);
      if (in[i] && !in[j]) ab += s(i, j);
      if (!in[i] && !in[j]) bb += s(i, j);
    }
  }
  const double mu = 1.0 + tau * total;
  return std::log(mu + aa - (tau - 1.0) * ab - tau * bb);
}

inline double DirectF(const SquareMatrix& s,
                      const std::vector<std::uint32_t>& groups,
                      std::size_t num_groups, const std::vector<double>& q,
                      const ObjectiveParams& p, const std::vector<bool>& in) {
  std::vector<int> counts(num_groups, 0);
  double center = 0.0;
  for (Index k = 0; k < in.size(); ++k) {
    if (!in[k]) continue;
    ++counts[groups[k]];
    center += q[k];
  }
  double balance = 0.0;
  for (int c : counts) balance += std::log(c + 1.0);
  return DirectH(s, p.tau, in) + p.lambda1 * balance + p.lambda2 * center;
}

// Best F over all subsets of exactly `k` elements (F is monotone, so this is
// also the best over |A| <= k).
inline double BruteForceBest(const SquareMatrix& s,
                             const std::vector<std::uint32_t>& groups,
                             std::size_t num_groups,
                             const std::vector<double>& q,
                             const ObjectiveParams& p, std::size_t k) {
  const std::size_t m = s.size();
  double best = -INFINITY;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::vector<bool> in(m);
    for (Index i = 0; i < m; ++i) in[i] = (mask >> i) & 1u;
    best = std::max(best, DirectF(s, groups, num_groups, q, p, in));
  }
  return best;
}

inline std::vector<bool> MaskOf(const std::vector<Index>& a, std::size_t m) {
  std::vector<bool> in(m, false);
  for (Index i : a) in[i] = true;
  return in;
}

// A full objective instance with owned graph, groups and bias. tau in (1, 5],
// lambda1 in [0, 100), lambda2 in [0, 10), 1..4 groups.
struct Instance {
  SquareMatrix s;
  std::vector<std::uint32_t> group_of;
  std::size_t num_groups;
  std::vector<double> q;
  ObjectiveParams params;
  SimilarityGraph graph;
  GroupIndex groups;
  CenterBias bias;

  Objective objective() const { return Objective(graph, groups, bias, params); }
};

Instance RandomInstance(std::mt19937_64& rng, std::size_t m) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(m, 4))(rng);
  SquareMatrix s = RandomSimilarity(rng, m, 0.3 + 0.7 * unit(rng));
  auto groups = RandomGroups(rng, m, n);
  auto q = RandomBias(rng, m);
  const ObjectiveParams p{1.0 + 4.0 * unit(rng) + 1e-9, 100.0 * unit(rng), 10.0 * unit(rng)};
  return {s, groups, n, q, p, SimilarityGraph::FromDense(s), GroupIndex(groups, n),
          CenterBias(q)};
}

}  // namespace corfl::testing

#endif  // CORFL_TESTS_SUPPORT_ORACLES_HPP_

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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "corfl/optimizer.hpp"
#include "support/errors.hpp"
#include "support/oracles.hpp"

namespace corfl {
namespace {

using testing::CodeOf;

TEST(GreedyTest, TwoByTwoExample) {
  const auto g = SimilarityGraph::FromRows({{1, 0.5}, {0.5, 1}});
  const GroupIndex groups({0, 1}, 2);
  const auto bias = CenterBias::Zeros(2);
  const Objective objective(g, groups, bias, {2.0, 0.0, 0.0});
  for (const auto& result : {GreedyNaive(objective, 2), GreedyLazy(objective, 2)}) {
    EXPECT_EQ(result.chosen, (std::vector<Index>{0, 1}));
    ASSERT_EQ(result.gains.size(), 2u);
    EXPECT_NEAR(result.gains[0], std::log(5.5), 1e-15);
    EXPECT_NEAR(result.gains[1], std::log(10.0 / 5.5), 1e-15);
    EXPECT_NEAR(result.objective_trace[1], std::log(10.0), 1e-14);
  }
  EXPECT_EQ(GreedyNaive(objective, 2).evaluations, 3u);
}

TEST(GreedyTest, KOutOfRange) {
  const auto g = SimilarityGraph::FromRows({{1, 0.5}, {0.5, 1}});
  const GroupIndex groups({0, 0}, 1);
  const auto bias = CenterBias::Zeros(2);
  const Objective objective(g, groups, bias, {});
  EXPECT_EQ(CodeOf([&] { GreedyNaive(objective, 0); }), ErrorCode::kKOutOfRange);
  EXPECT_EQ(CodeOf([&] { GreedyLazy(objective, 3); }), ErrorCode::kKOutOfRange);
}

TEST(GreedyTest, SingleCandidate) {
  const auto g = SimilarityGraph::FromRows({{0.3}});
  const GroupIndex groups({0}, 1);
  const auto bias = CenterBias::Zeros(1);
  const Objective objective(g, groups, bias, {});
  const auto lazy = GreedyLazy(objective, 1);
  EXPECT_EQ(lazy.chosen, (std::vector<Index>{0}));
  EXPECT_EQ(lazy.evaluations, 1u);
}

TEST(GreedyTest, FullCardinalityIsPermutation) {
  std::mt19937_64 rng(5);
  const testing::Instance inst = testing::RandomInstance(rng, 15);
  const auto result = GreedyLazy(inst.objective(), 15);
  std::vector<Index> sorted = result.chosen;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Index> all(15);
  std::iota(all.begin(), all.end(), Index{0});
  EXPECT_EQ(sorted, all);
}

TEST(GreedyTest, NaiveEvaluationCount) {
  std::mt19937_64 rng(6);
  const testing::Instance inst = testing::RandomInstance(rng, 20);
  const auto result = GreedyNaive(inst.objective(), 5);
  EXPECT_EQ(result.evaluations, 20u + 19u + 18u + 17u + 16u);
}

TEST(GreedyPropertyTest, LazyEqualsNaive) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + trial % 40;
    const testing::Instance inst = testing::RandomInstance(rng, m);
    const std::size_t k = 1 + trial % m;
    const Objective objective = inst.objective();
    const auto naive = GreedyNaive(objective, k);
    const auto lazy = GreedyLazy(objective, k);
    EXPECT_EQ(lazy.chosen, naive.chosen);
    EXPECT_EQ(lazy.gains, naive.gains);
    EXPECT_EQ(lazy.objective_trace, naive.objective_trace);
    EXPECT_LE(lazy.evaluations, naive.evaluations);
  }
}

TEST(GreedyPropertyTest, TiesGoToSmallestIndex) {
  // All candidates identical: every gain ties at every step.
  const std::size_t m = 6;
  const auto g = SimilarityGraph::FromDense(SquareMatrix(m, 0.25));
  const GroupIndex groups(std::vector<std::uint32_t>(m, 0), 1);
  const auto bias = CenterBias::Zeros(m);
  const Objective objective(g, groups, bias, {});
  const std::vector<Index> expected{0, 1, 2, 3};
  EXPECT_EQ(GreedyNaive(objective, 4).chosen, expected);
  EXPECT_EQ(GreedyLazy(objective, 4).chosen, expected);
}

TEST(GreedyPropertyTest, GainsNonIncreasingAndTelescoping) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 2 + trial % 30;
    const testing::Instance inst = testing::RandomInstance(rng, m);
    const std::size_t k = 1 + trial % m;
    const auto result = GreedyLazy(inst.objective(), k);
    double sum = 0.0;
    for (std::size_t t = 0; t < k; ++t) {
      if (t > 0) EXPECT_LE(result.gains[t], result.gains[t - 1]);
      sum += result.gains[t];
      EXPECT_NEAR(result.objective_trace[t], sum, 1e-9);
      if (result.gains[t] > 0 && t > 0) {
        EXPECT_GT(result.objective_trace[t], result.objective_trace[t - 1]);
      }
    }
    const double direct = testing::DirectF(inst.s, inst.group_of, inst.num_groups, inst.q,
                                           inst.params, testing::MaskOf(result.chosen, m));
    EXPECT_NEAR(direct, sum, 1e-9);
  }
}

TEST(GreedyPropertyTest, ApproximationGuaranteeAgainstBruteForce) {
  std::mt19937_64 rng(9);
  const double ratio = 1.0 - 1.0 / std::exp(1.0);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 2 + trial % 11;
    const std::size_t k = 1 + trial % std::min<std::size_t>(4, m);
    const testing::Instance inst = testing::RandomInstance(rng, m);
    const auto result = GreedyLazy(inst.objective(), k);
    const double greedy = testing::DirectF(inst.s, inst.group_of, inst.num_groups, inst.q,
                                           inst.params, testing::MaskOf(result.chosen, m));
    const double best = testing::BruteForceBest(inst.s, inst.group_of, inst.num_groups,
                                                inst.q, inst.params, k);
    EXPECT_GE(greedy, ratio * best);
  }
}

TEST(GreedyPropertyTest, Deterministic) {
  std::mt19937_64 rng(10);
  const testing::Instance inst = testing::RandomInstance(rng, 35);
  const Objective objective = inst.objective();
  EXPECT_EQ(GreedyLazy(objective, 10), GreedyLazy(objective, 10));
  EXPECT_EQ(GreedyNaive(objective, 10), GreedyNaive(objective, 10));
}

}  // namespace
}  // namespace corfl

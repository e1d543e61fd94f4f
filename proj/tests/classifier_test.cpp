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

#include <array>
#include <random>
#include <vector>

#include "corfl/classifier.hpp"
#include "corfl/kdtree.hpp"
#include "support/errors.hpp"
#include "support/toy_data.hpp"

namespace corfl {
namespace {

using testing::CodeOf;

DescriptorSet RandomSet(std::mt19937_64& rng, std::size_t n, std::size_t dim,
                        bool quantize = false) {
  std::normal_distribution<double> n01(0.0, 1.0);
  DescriptorSet s(dim);
  std::vector<double> v(dim);
  for (std::size_t i = 0; i < n; ++i) {
    for (double& x : v) x = quantize ? std::round(2.0 * n01(rng)) : n01(rng);
    s.Add(v);
  }
  return s;
}

TEST(KdTreeTest, SmallExample) {
  const DescriptorSet pts(2, {0, 0, 3, 4, -1, 1});
  const KdTree tree(pts, 1);
  EXPECT_EQ(tree.NearestSquaredDistance(std::vector<double>{3, 3}), 1.0);
  EXPECT_EQ(tree.NearestSquaredDistance(std::vector<double>{-1, 1}), 0.0);
  EXPECT_EQ(CodeOf([&] { tree.NearestSquaredDistance(std::vector<double>{1}); }),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(CodeOf([] { KdTree(DescriptorSet(2)).NearestSquaredDistance(
                            std::vector<double>{0, 0}); }),
            ErrorCode::kEmptyPools);
}

TEST(KdTreePropertyTest, BitIdenticalToBruteForce) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t dim = 1 + trial % 9;
    const bool quantize = trial % 3 == 0;  // many ties and duplicates
    const DescriptorSet pts = RandomSet(rng, 1 + trial * 7 % 300, dim, quantize);
    const KdTree tree(pts, 1 + trial % 10);
    const DescriptorSet queries = RandomSet(rng, 50, dim, quantize);
    for (std::size_t q = 0; q < queries.size(); ++q) {
      EXPECT_EQ(tree.NearestSquaredDistance(queries[q]),
                BruteForceNearestSquaredDistance(pts, queries[q]));
    }
  }
}

std::array<DescriptorSet, kNumCells> CellsWith(std::size_t cell,
                                               const DescriptorSet& set) {
  std::array<DescriptorSet, kNumCells> cells;
  for (auto& c : cells) c = DescriptorSet(set.dim());
  cells[cell] = set;
  return cells;
}

TEST(RfToClassTest, WorkedExample) {
  ClassPools pools;
  pools.AddClass("a", CellsWith(0, DescriptorSet(2, {0, 0, 2, 0})));
  ReceptiveField q;
  q.cells[0] = DescriptorSet(2, {1, 0, 2, 1});  // nearest: 1 and 1
  q.cells[5] = DescriptorSet(2, {0, 0});        // empty pool cell
  EXPECT_DOUBLE_EQ(RfToClass(q, pools, 0), 1.0 + 1.0);
  EXPECT_DOUBLE_EQ(RfToClass(q, pools, 0, 0.5), 1.5);
  EXPECT_EQ(CodeOf([&] { RfToClass(q, pools, 1); }), ErrorCode::kIndexOutOfRange);

  pools.BuildIndex();
  EXPECT_TRUE(pools.indexed());
  EXPECT_DOUBLE_EQ(RfToClass(q, pools, 0), 2.0);
}

TEST(BuildPoolsTest, UnionOfSelectedWindows) {
  std::vector<ReceptiveField> cands(3);
  for (std::size_t k = 0; k < 3; ++k) {
    for (auto& c : cands[k].cells) c = DescriptorSet(1);
    cands[k].cells[2].Add(std::vector<double>{static_cast<double>(k)});
  }
  const std::vector<Index> chosen = {0, 2};
  const std::vector<ClassSelection> sel = {{"x", cands, chosen}};
  const ClassPools pools = BuildPools(sel);
  ASSERT_EQ(pools.num_classes(), 1u);
  EXPECT_EQ(pools.pool(0, 2), DescriptorSet(1, {0.0, 2.0}));
  EXPECT_TRUE(pools.pool(0, 0).empty());

  const std::vector<Index> bad = {3};
  const std::vector<ClassSelection> bad_sel = {{"x", cands, bad}};
  EXPECT_EQ(CodeOf([&] { BuildPools(bad_sel); }), ErrorCode::kIndexOutOfRange);
}

TEST(ClassPoolsTest, DimensionCheck) {
  ClassPools pools;
  pools.AddClass("a", CellsWith(0, DescriptorSet(2, {0, 0})));
  EXPECT_EQ(CodeOf([&] { pools.AddClass("b", CellsWith(0, DescriptorSet(3, {0, 0, 0}))); }),
            ErrorCode::kDimensionMismatch);
}

// Whole-image windows as pools: every class pools all cells of its images.
ClassPools PoolsFromImages(const std::vector<std::vector<ImageDescriptors>>& per_class) {
  ClassPools pools;
  for (std::size_t c = 0; c < per_class.size(); ++c) {
    std::array<DescriptorSet, kNumCells> cells;
    for (const auto& img : per_class[c]) {
      const ReceptiveField rf =
          BinDescriptors(img, Rect{0, 0, img.width, img.height});
      for (std::size_t l = 0; l < kNumCells; ++l) cells[l].Append(rf.cells[l]);
    }
    pools.AddClass("c" + std::to_string(c), std::move(cells));
  }
  return pools;
}

TEST(PredictTest, SeparatedClassesAndIndexAgreement) {
  std::mt19937_64 rng(5);
  const auto classes = testing::BasisClasses(3, 6);
  std::vector<std::vector<ImageDescriptors>> train(3);
  for (std::size_t c = 0; c < 3; ++c) {
    for (int n = 0; n < 2; ++n) {
      train[c].push_back(testing::MakeToyImage(rng, "t", 40, 40,
                                               classes[c].center, 30, 0.05));
    }
  }
  ClassPools pools = PoolsFromImages(train);
  const ClassifierParams params{0.0, 1.0, 0.5, TemplateConfig{{0.5, 0.95}, 3}};
  for (std::size_t c = 0; c < 3; ++c) {
    const auto query = testing::MakeToyImage(rng, "q", 40, 40,
                                             classes[c].center, 20, 0.05);
    pools.DropIndex();
    const Prediction brute = Predict(query, pools, params);
    pools.BuildIndex(4);
    const Prediction indexed = Predict(query, pools, params);
    EXPECT_EQ(brute.label, c);
    EXPECT_EQ(brute.class_scores, indexed.class_scores);
    EXPECT_EQ(brute.best_candidate, indexed.best_candidate);
    EXPECT_EQ(brute.class_scores.size(), 3u);
    EXPECT_EQ(brute.score, brute.class_scores[c]);
  }
}

TEST(PredictTest, CenterPenaltyPrefersCentredWindow) {
  // One class; the query has a single descriptor everywhere near the middle,
  // so windows tie on distance and the penalty decides.
  ClassPools pools;
  std::array<DescriptorSet, kNumCells> cells;
  for (auto& c : cells) c = DescriptorSet(2, {1.0, 0.0});
  pools.AddClass("only", cells);
  ImageDescriptors q;
  q.id = "q";
  q.width = q.height = 32;
  q.positions = {{16.0, 16.0}};
  q.vectors = DescriptorSet(2, {1.0, 0.0});
  const TemplateConfig t{{0.5}, 3};
  const Prediction p = Predict(q, pools, {1.0, 1.0, 0.5, t});
  EXPECT_EQ(p.best_candidate, 4u);  // centre of the 3x3 anchor grid
  EXPECT_DOUBLE_EQ(p.score, 0.0);
}

TEST(PredictTest, Errors) {
  ClassPools none;
  ImageDescriptors q;
  q.id = "q";
  q.width = q.height = 32;
  q.vectors = DescriptorSet(2);
  EXPECT_EQ(CodeOf([&] { Predict(q, none); }), ErrorCode::kEmptyPools);

  ClassPools empty_class;
  std::array<DescriptorSet, kNumCells> cells;
  empty_class.AddClass("e", cells);
  EXPECT_EQ(CodeOf([&] { Predict(q, empty_class); }), ErrorCode::kEmptyPools);

  ClassPools pools;
  pools.AddClass("a", CellsWith(0, DescriptorSet(2, {0, 0})));
  EXPECT_EQ(CodeOf([&] { Predict(q, pools); }), ErrorCode::kNoDescriptors);

  // A descriptor in the corner no small window covers is still found by
  // some window, so only a fully uncovered query fails.
  q.positions = {{31.5, 31.5}};
  q.vectors = DescriptorSet(2, {0.0, 0.0});
  EXPECT_NO_THROW(Predict(q, pools));
}

}  // namespace
}  // namespace corfl

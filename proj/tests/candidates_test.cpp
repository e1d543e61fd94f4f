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

#include <cmath>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "corfl/candidates.hpp"
#include "support/errors.hpp"

namespace corfl {
namespace {

using testing::CodeOf;

ImageDescriptors MakeImage(int w, int h, std::vector<Point2> positions,
                           std::size_t dim = 2) {
  ImageDescriptors img;
  img.id = "img";
  img.width = w;
  img.height = h;
  img.vectors = DescriptorSet(dim);
  std::vector<double> v(dim, 0.0);
  for (std::size_t n = 0; n < positions.size(); ++n) {
    v[0] = static_cast<double>(n);
    img.vectors.Add(v);
  }
  img.positions = std::move(positions);
  return img;
}

TEST(TemplateTest, DefaultGridShape) {
  const std::vector<Rect> rects = MakeTemplates(64, 48);
  ASSERT_EQ(rects.size(), 256u);
  EXPECT_EQ(rects.front(), (Rect{0, 0, 32, 24}));
  EXPECT_EQ(rects[1], (Rect{5, 0, 32, 24}));  // round(32 / 7)
  EXPECT_EQ(rects[63], (Rect{32, 24, 32, 24}));
  EXPECT_EQ(rects.back(), (Rect{3, 2, 61, 46}));  // 0.95 scale, last anchor

  std::set<std::tuple<int, int, int, int>> unique;
  for (const Rect& r : rects) {
    EXPECT_GE(r.x0, 0);
    EXPECT_GE(r.y0, 0);
    EXPECT_LE(r.x0 + r.w, 64);
    EXPECT_LE(r.y0 + r.h, 48);
    unique.insert({r.x0, r.y0, r.w, r.h});
  }
  // Large scales leave only a few pixels of slack, so anchors coincide.
  EXPECT_EQ(unique.size(), 204u);
}

TEST(TemplateTest, SingleAnchorIsCentred) {
  const auto rects = MakeTemplates(100, 60, TemplateConfig{{0.5}, 1});
  ASSERT_EQ(rects.size(), 1u);
  EXPECT_EQ(rects[0], (Rect{25, 15, 50, 30}));
}

TEST(TemplateTest, Errors) {
  EXPECT_EQ(CodeOf([] { MakeTemplates(15, 100); }), ErrorCode::kImageTooSmall);
  EXPECT_EQ(CodeOf([] { MakeTemplates(64, 64, TemplateConfig{{}, 8}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { MakeTemplates(64, 64, TemplateConfig{{1.2}, 8}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { MakeTemplates(64, 64, TemplateConfig{{0.5}, 0}); }),
            ErrorCode::kInvalidArgument);
}

TEST(BinningTest, CellAssignment) {
  const auto img = MakeImage(64, 48, {{0.0, 0.0}, {31.9, 23.9}, {16.0, 12.0},
                                      {32.0, 5.0}});
  const ReceptiveField rf = BinDescriptors(img, Rect{0, 0, 32, 24});
  EXPECT_EQ(rf.descriptor_count(), 3u);  // x = 32 lies outside
  // Level 2x2.
  EXPECT_EQ(rf.cells[0].size(), 1u);
  EXPECT_EQ(rf.cells[3].size(), 2u);  // (16, 12) starts the lower-right cell
  // Level 3x3 and 4x4: corners.
  EXPECT_EQ(rf.cells[LevelOffset(1)].size(), 1u);
  EXPECT_EQ(rf.cells[LevelOffset(1) + 8].size(), 1u);
  EXPECT_EQ(rf.cells[LevelOffset(2)].size(), 1u);
  EXPECT_EQ(rf.cells[LevelOffset(2) + 15].size(), 1u);
  EXPECT_EQ(rf.cells[LevelOffset(2) + 10].size(), 1u);  // (16, 12) -> (2, 2)
  EXPECT_EQ(rf.window, (Rect{0, 0, 32, 24}));
}

TEST(BinningTest, EmptyWindowAndBounds) {
  const auto img = MakeImage(32, 32, {{30.0, 30.0}});
  const ReceptiveField rf = BinDescriptors(img, Rect{0, 0, 16, 16});
  EXPECT_TRUE(rf.empty());
  for (const auto& cell : rf.cells) EXPECT_EQ(cell.dim(), 2u);
  EXPECT_EQ(CodeOf([&] { BinDescriptors(img, Rect{20, 0, 16, 16}); }),
            ErrorCode::kRectOutOfBounds);
  EXPECT_EQ(CodeOf([&] { BinDescriptors(img, Rect{0, 0, 0, 16}); }),
            ErrorCode::kRectOutOfBounds);
}

TEST(BinningPropertyTest, EveryLevelPartitionsTheWindow) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(0.0, 80.0), uy(0.0, 50.0);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Point2> pts;
    for (int n = 0; n < 60; ++n) pts.push_back({ux(rng), uy(rng)});
    const auto img = MakeImage(80, 50, pts);
    for (const Rect& r : MakeTemplates(80, 50, TemplateConfig{{0.5, 0.8}, 4})) {
      const ReceptiveField rf = BinDescriptors(img, r);
      std::size_t inside = 0;
      for (const Point2& p : pts) {
        inside += p.x >= r.x0 && p.x < r.x0 + r.w && p.y >= r.y0 && p.y < r.y0 + r.h;
      }
      for (std::size_t level = 0; level < kPyramidLevels.size(); ++level) {
        const std::size_t g = kPyramidLevels[level];
        std::size_t total = 0;
        for (std::size_t c = 0; c < g * g; ++c) {
          total += rf.cells[LevelOffset(level) + c].size();
        }
        EXPECT_EQ(total, inside);
      }
    }
  }
}

TEST(CenterBiasTest, TemplateWindows) {
  const std::vector<Rect> rects = {{16, 12, 32, 24}, {0, 0, 32, 24}};
  const CenterBias q = TemplateCenterBias(64, 48, rects);
  EXPECT_DOUBLE_EQ(q[0], 1.0);
  EXPECT_NEAR(q[1], std::exp(-0.5), 1e-15);  // 0.5 of the half diagonal
}

TEST(NormalizeTest, UnitLengthAndZeroVectors) {
  ImageDescriptors img = MakeImage(32, 32, {{1, 1}, {2, 2}});
  img.vectors = DescriptorSet(2, {3.0, 4.0, 0.0, 0.0});
  NormalizeDescriptors(img);
  EXPECT_DOUBLE_EQ(img.vectors[0][0], 0.6);
  EXPECT_DOUBLE_EQ(img.vectors[0][1], 0.8);
  EXPECT_EQ(img.vectors[1][0], 0.0);
}

TEST(CandidatePoolTest, LayoutAndErrors) {
  const auto a = MakeImage(64, 48, {{10, 10}, {40, 30}});
  const auto b = MakeImage(32, 32, {{5, 20}});
  const std::vector<ImageDescriptors> images = {a, b};
  const CandidatePool pool = BuildCandidatePool(images);
  ASSERT_EQ(pool.size(), 512u);
  EXPECT_EQ(pool.templates_per_image, 256u);
  EXPECT_EQ(pool.groups.num_groups(), 2u);
  EXPECT_EQ(pool.groups.group_of(255), 0u);
  EXPECT_EQ(pool.groups.group_of(256), 1u);
  EXPECT_EQ(pool.template_id[300], 44u);
  EXPECT_EQ(pool.bias.size(), 512u);
  EXPECT_EQ(pool.fields[0].window, MakeTemplates(64, 48)[0]);

  EXPECT_EQ(CodeOf([] { BuildCandidatePool({}); }), ErrorCode::kEmptyCategory);
  auto bad = MakeImage(32, 32, {{40, 1}});
  EXPECT_EQ(CodeOf([&] { BuildCandidatePool(std::vector{bad}); }),
            ErrorCode::kInvalidDescriptor);
}

}  // namespace
}  // namespace corfl

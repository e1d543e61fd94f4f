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

#ifndef CORFL_SYNTH_HPP_
#define CORFL_SYNTH_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "corfl/graph.hpp"
#include "corfl/optimizer.hpp"

namespace corfl {

// Three isotropic Gaussian clusters standing in for three images; their
// overlap near the origin plays the role of the shared object.
struct SyntheticConfig {
  std::uint64_t seed = 42;
  std::size_t per_cluster = 60;
  double stddev = 0.35;
};

inline constexpr std::array<Point2, 3> kClusterMeans = {
    Point2{0.0, 0.5}, Point2{-0.433, -0.25}, Point2{0.433, -0.25}};

struct SyntheticInstance {
  SyntheticConfig config;
  std::vector<Point2> points;  // cluster-major
  GroupIndex clusters;
};

SyntheticInstance GenerateSynthetic(const SyntheticConfig& config = {});

// s_ij = exp(-(d_ij / max d) / (2 sigma^2)) over Euclidean point distances.
SimilarityGraph EuclideanGraph(const std::vector<Point2>& points,
                               double sigma = 0.3);

struct DemoParams {
  std::size_t k = 6;
  double tau = 2.0;
  double lambda1 = 2.0;
  double sigma = 0.3;
  bool record_gain_field = false;
};

struct DemoResult {
  SelectionResult selection;  // lazy greedy
  // gain_field[t][i]: gain of point i before addition t; 0 for points that
  // are already selected. Empty unless requested.
  std::vector<std::vector<double>> gain_field;
};

DemoResult RunDemo(const SyntheticInstance& instance,
                   const DemoParams& params = {});

// "iteration,point_id,cluster,x,y,gain,selected"; `selected` is 1 when the
// point belongs to the selection after that iteration.
void WriteGainTraceCsv(std::ostream& out, const SyntheticInstance& instance,
                       const DemoResult& result);

// "point_id,cluster,x,y".
void WritePointsCsv(std::ostream& out, const SyntheticInstance& instance);

}  // namespace corfl

#endif  // CORFL_SYNTH_HPP_

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

#include "corfl/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <string>

#include "corfl/error.hpp"
#include "corfl/ped.hpp"

namespace corfl {
namespace {

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

SyntheticInstance GenerateSynthetic(const SyntheticConfig& config) {
  if (config.per_cluster < 1) {
    throw Error(ErrorCode::kInvalidArgument, "per_cluster must be >= 1");
  }
  if (!(config.stddev >= 0.0) || !std::isfinite(config.stddev)) {
    throw Error(ErrorCode::kInvalidArgument, "std must be >= 0");
  }
  SyntheticInstance instance;
  instance.config = config;
  std::mt19937_64 rng(config.seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  for (const Point2& mean : kClusterMeans) {
    for (std::size_t n = 0; n < config.per_cluster; ++n) {
      const double dx = noise(rng);
      const double dy = noise(rng);
      instance.points.push_back(
          {mean.x + config.stddev * dx, mean.y + config.stddev * dy});
    }
  }
  instance.clusters = GroupIndex::Contiguous(kClusterMeans.size(),
                                             config.per_cluster);
  return instance;
}

SimilarityGraph EuclideanGraph(const std::vector<Point2>& points,
                               double sigma) {
  const std::size_t m = points.size();
  SquareMatrix distances(m, 0.0);
  for (Index i = 0; i < m; ++i) {
    for (Index j = i + 1; j < m; ++j) {
      const double d = std::hypot(points[i].x - points[j].x,
                                  points[i].y - points[j].y);
      distances(i, j) = d;
      distances(j, i) = d;
    }
  }
  return SimilarityGraph::FromDense(KernelizeMatrix(distances, sigma));
}

DemoResult RunDemo(const SyntheticInstance& instance, const DemoParams& params) {
  const SimilarityGraph graph = EuclideanGraph(instance.points, params.sigma);
  const CenterBias bias = CenterBias::Zeros(graph.size());
  const Objective objective(graph, instance.clusters, bias,
                            {params.tau, params.lambda1, 0.0});
  DemoResult result;
  result.selection = GreedyLazy(objective, params.k);
  if (params.record_gain_field) {
    SelectionState state = objective.EmptyState();
    for (Index chosen : result.selection.chosen) {
      std::vector<double> row(graph.size(), 0.0);
      for (Index i = 0; i < graph.size(); ++i) {
        if (!state.contains(i)) row[i] = objective.Gain(state, i);
      }
      result.gain_field.push_back(std::move(row));
      objective.Add(state, chosen);
    }
  }
  return result;
}

void WriteGainTraceCsv(std::ostream& out, const SyntheticInstance& instance,
                       const DemoResult& result) {
  out << "iteration,point_id,cluster,x,y,gain,selected\n";
  std::vector<bool> selected(instance.points.size(), false);
  for (std::size_t t = 0; t < result.gain_field.size(); ++t) {
    selected[result.selection.chosen[t]] = true;
    for (Index i = 0; i < instance.points.size(); ++i) {
      out << t << ',' << i << ',' << instance.clusters.group_of(i) << ','
          << Fmt(instance.points[i].x) << ',' << Fmt(instance.points[i].y)
          << ',' << Fmt(result.gain_field[t][i]) << ','
          << (selected[i] ? 1 : 0) << '\n';
    }
  }
}

void WritePointsCsv(std::ostream& out, const SyntheticInstance& instance) {
  out << "point_id,cluster,x,y\n";
  for (Index i = 0; i < instance.points.size(); ++i) {
    out << i << ',' << instance.clusters.group_of(i) << ','
        << Fmt(instance.points[i].x) << ',' << Fmt(instance.points[i].y)
        << '\n';
  }
}

}  // namespace corfl

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

#include "corfl/ped.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "corfl/error.hpp"

namespace corfl {
namespace {

void CheckSigma(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw Error(ErrorCode::kNonPositiveSigma, "sigma must be positive");
  }
}

// Accumulates both chamfer terms from one pass over the r x q distance table.
double Chamfer(const DescriptorSet& x, const DescriptorSet& y,
               std::vector<double>& col_min) {
  const std::size_t r = x.size();
  const std::size_t q = y.size();
  col_min.assign(q, std::numeric_limits<double>::infinity());
  double row_term = 0.0;
  for (Index i = 0; i < r; ++i) {
    const auto xi = x[i];
    double best = std::numeric_limits<double>::infinity();
    for (Index j = 0; j < q; ++j) {
      const double d = SquaredDistance(xi, y[j]);
      best = std::min(best, d);
      col_min[j] = std::min(col_min[j], d);
    }
    row_term += best;
  }
  double col_term = 0.0;
  for (double d : col_min) col_term += d;
  return row_term / (2.0 * static_cast<double>(r)) +
         col_term / (2.0 * static_cast<double>(q));
}

double SetDistanceImpl(const DescriptorSet& x, const DescriptorSet& y,
                       double empty_distance, std::vector<double>& scratch) {
  if (x.empty() && y.empty()) return 0.0;
  if (x.empty() || y.empty()) return empty_distance;
  if (x.dim() != y.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "descriptor dimensions " + std::to_string(x.dim()) + " and " +
                    std::to_string(y.dim()));
  }
  return Chamfer(x, y, scratch);
}

double PedImpl(const ReceptiveField& a, const ReceptiveField& b,
               double empty_distance, std::vector<double>& scratch) {
  double sum = 0.0;
  for (std::size_t l = 0; l < kNumCells; ++l) {
    sum += SetDistanceImpl(a.cells[l], b.cells[l], empty_distance, scratch);
  }
  return sum;
}

void CheckSquare(const SquareMatrix& m) {
  if (m.size() == 0) {
    throw Error(ErrorCode::kNonSquare, "matrix must not be empty");
  }
}

}  // namespace

double SetDistance(const DescriptorSet& x, const DescriptorSet& y,
                   double empty_distance) {
  std::vector<double> scratch;
  return SetDistanceImpl(x, y, empty_distance, scratch);
}

double PyramidErrorDistance(const ReceptiveField& a, const ReceptiveField& b,
                            double empty_distance) {
  std::vector<double> scratch;
  return PedImpl(a, b, empty_distance, scratch);
}

SquareMatrix PedMatrix(std::span<const ReceptiveField> fields,
                       double empty_distance, unsigned threads,
                       const GroupIndex* skip_same_group) {
  const std::size_t m = fields.size();
  if (skip_same_group != nullptr && skip_same_group->size() != m) {
    throw Error(ErrorCode::kInvalidArgument,
                "group index does not match the candidate count");
  }
  SquareMatrix out(m, 0.0);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(m, 1)));

  // Row i owns entries (i, j > i) and their mirrors, so every cell has a
  // single writer.
  auto work = [&](unsigned worker) {
    std::vector<double> scratch;
    for (Index i = worker; i < m; i += threads) {
      for (Index j = i + 1; j < m; ++j) {
        double d;
        if (skip_same_group != nullptr &&
            skip_same_group->group_of(i) == skip_same_group->group_of(j)) {
          d = kNoEdge;
        } else {
          d = PedImpl(fields[i], fields[j], empty_distance, scratch);
        }
        out(i, j) = d;
        out(j, i) = d;
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          work(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  return out;
}

double Kernelize(double distance, double sigma) {
  CheckSigma(sigma);
  if (!(distance >= 0.0)) {
    throw Error(ErrorCode::kNegativeDistance, "distance must be >= 0");
  }
  return std::exp(-distance / (2.0 * sigma * sigma));
}

SquareMatrix KernelizeMatrix(const SquareMatrix& distances, double sigma) {
  CheckSigma(sigma);
  CheckSquare(distances);
  const std::size_t m = distances.size();
  double max_entry = 0.0;
  for (double d : distances.values()) {
    if (!(d >= 0.0)) {
      throw Error(ErrorCode::kNegativeDistance,
                  "distances must be >= 0 (or inf)");
    }
    if (std::isfinite(d)) max_entry = std::max(max_entry, d);
  }
  const double scale = max_entry > 0.0 ? max_entry : 1.0;
  SquareMatrix out(m, 0.0);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      const double d = distances(i, j);
      if (i == j) {
        out(i, j) = 1.0;
      } else if (std::isfinite(d)) {
        out(i, j) = Kernelize(d / scale, sigma);
      }
    }
  }
  return out;
}

SquareMatrix SparsifyKnn(const SquareMatrix& similarities, std::size_t k) {
  CheckSquare(similarities);
  const std::size_t m = similarities.size();
  if (k == 0) {
    throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  }
  if (k >= m) {
    throw Error(ErrorCode::kKTooLarge,
                "k=" + std::to_string(k) + " requires more than " +
                    std::to_string(m) + " candidates");
  }
  SquareMatrix kept(m, 0.0);
  std::vector<Index> order;
  for (Index i = 0; i < m; ++i) {
    order.clear();
    for (Index j = 0; j < m; ++j) {
      if (j != i) order.push_back(j);
    }
    const auto row = similarities.row(i);
    std::partial_sort(order.begin(), order.begin() + k, order.end(),
                      [&](Index a, Index b) {
                        if (row[a] != row[b]) return row[a] > row[b];
                        return a < b;
                      });
    for (std::size_t n = 0; n < k; ++n) kept(i, order[n]) = row[order[n]];
    kept(i, i) = row[i];
  }
  SquareMatrix out(m, 0.0);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) out(i, j) = std::max(kept(i, j), kept(j, i));
  }
  return out;
}

SquareMatrix SparsifyEps(const SquareMatrix& similarities, double threshold) {
  CheckSquare(similarities);
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "similarity threshold must lie in [0, 1]");
  }
  SquareMatrix out = similarities;
  const std::size_t m = out.size();
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      if (i != j && out(i, j) < threshold) out(i, j) = 0.0;
    }
  }
  return out;
}

double SimilarityThreshold(double distance_radius, double sigma) {
  return Kernelize(distance_radius, sigma);
}

SquareMatrix PairwiseSmooth(const SquareMatrix& distances,
                            const GroupIndex& groups, std::size_t m_keep) {
  CheckSquare(distances);
  const std::size_t m = distances.size();
  if (groups.size() != m) {
    throw Error(ErrorCode::kInvalidArgument,
                "group index does not match the matrix size");
  }
  if (m_keep == 0) {
    throw Error(ErrorCode::kInvalidArgument, "m_keep must be positive");
  }
  std::vector<std::vector<Index>> members(groups.num_groups());
  for (Index i = 0; i < m; ++i) members[groups.group_of(i)].push_back(i);

  SquareMatrix out(m, kNoEdge);
  for (Index i = 0; i < m; ++i) out(i, i) = distances(i, i);

  std::vector<std::tuple<double, Index, Index>> block;
  for (std::size_t g = 0; g < members.size(); ++g) {
    for (std::size_t h = g + 1; h < members.size(); ++h) {
      block.clear();
      for (Index i : members[g]) {
        for (Index j : members[h]) {
          const double d = distances(i, j);
          if (std::isfinite(d)) block.emplace_back(d, i, j);
        }
      }
      const std::size_t keep = std::min(m_keep, block.size());
      std::partial_sort(block.begin(), block.begin() + keep, block.end());
      for (std::size_t n = 0; n < keep; ++n) {
        const auto [d, i, j] = block[n];
        out(i, j) = d;
        out(j, i) = d;
      }
    }
  }
  return out;
}

}  // namespace corfl

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

#ifndef CORFL_MATRIX_HPP_
#define CORFL_MATRIX_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace corfl {

using Index = std::size_t;

// Dense row-major square matrix of doubles.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0)
      : n_(n), values_(n * n, fill) {}
  SquareMatrix(std::size_t n, std::vector<double> values);

  std::size_t size() const noexcept { return n_; }

  double& operator()(Index i, Index j) { return values_[i * n_ + j]; }
  double operator()(Index i, Index j) const { return values_[i * n_ + j]; }

  std::span<double> row(Index i) { return {values_.data() + i * n_, n_}; }
  std::span<const double> row(Index i) const {
    return {values_.data() + i * n_, n_};
  }

  const std::vector<double>& values() const noexcept { return values_; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

}  // namespace corfl

#endif  // CORFL_MATRIX_HPP_

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

#ifndef CORFL_CONFIG_HPP_
#define CORFL_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corfl/candidates.hpp"

namespace corfl {

// Flat "key = value" run configuration shared by all subcommands. Keys left
// at "auto" resolve per subcommand (see Resolved*).
struct RunConfig {
  double tau = 2.0;
  std::optional<double> lambda1;  // auto: 100 for select, 2 for synth
  double lambda2 = 0.0;
  double sigma = 0.3;
  double sigma_c = 0.5;
  std::optional<std::size_t> k;      // auto: number of images (select), 6 (synth)
  std::optional<std::size_t> knn_k;  // auto: number of images
  std::size_t m_keep = 3;
  double d_empty = 1.0;
  std::uint64_t seed = 42;
  TemplateConfig templates;
  std::size_t per_cluster = 60;
  double stddev = 0.35;
  bool gain_trace = true;

  static const std::vector<std::string_view>& Keys();

  // Parses and validates one key. Unknown keys and malformed values throw
  // kConfigError.
  void Set(std::string_view key, std::string_view value);
  std::string Get(std::string_view key) const;

  void Validate() const;

  static RunConfig Parse(std::istream& in);
  static RunConfig Load(const std::string& path);
  // One "key = value" line per key, in Keys() order.
  std::string Serialize() const;

  double ResolvedLambda1Select() const { return lambda1.value_or(100.0); }
  double ResolvedLambda1Synth() const { return lambda1.value_or(2.0); }

  friend bool operator==(const RunConfig&, const RunConfig&);
};

std::string FormatDouble(double v);

}  // namespace corfl

#endif  // CORFL_CONFIG_HPP_

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

#ifndef CORFL_PIPELINE_HPP_
#define CORFL_PIPELINE_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "corfl/candidates.hpp"
#include "corfl/classifier.hpp"
#include "corfl/config.hpp"
#include "corfl/graph.hpp"
#include "corfl/io.hpp"
#include "corfl/optimizer.hpp"

namespace corfl {

// Candidate pool, graph and lazy-greedy selection for one category.
struct CategoryRun {
  CandidatePool pool;
  SimilarityGraph graph;
  SelectionResult selection;
};

// Builds the similarity graph of a category:
//   PED over cross-image pairs -> pairwise smoothing (m_keep per image pair)
//   -> max-normalization and Gaussian kernel -> kNN sparsification.
SimilarityGraph BuildCategoryGraph(const CandidatePool& pool,
                                   const RunConfig& config,
                                   unsigned threads = 0);

CategoryRun SelectCategory(std::span<const ImageDescriptors> images,
                           const RunConfig& config, unsigned threads = 0);

CategorySelection ToSelectionRecords(const std::string& name,
                                     std::span<const ImageDescriptors> images,
                                     const CategoryRun& run);

// Pools from selection records; windows are re-binned on the training
// images named by the records.
ClassPools PoolsFromSelections(const Manifest& manifest,
                               const std::vector<CategorySelection>& selections);

struct QueryPrediction {
  std::string query_id;
  std::optional<std::string> label;
  Prediction prediction;
};

std::string PredictionsToJson(const ClassPools& pools,
                              const std::vector<QueryPrediction>& predictions);

// Subcommand bodies. Each writes its outputs plus "effective_config.txt"
// into `out_dir` (created if missing).
void RunSynthCommand(const RunConfig& config, const std::filesystem::path& out_dir);

void RunSelectCommand(const std::filesystem::path& manifest_path,
                      const std::optional<std::string>& category,
                      const RunConfig& config,
                      const std::filesystem::path& out_dir,
                      unsigned threads = 0);

// Returns the accuracy over labelled queries, if any.
std::optional<double> RunClassifyCommand(
    const std::filesystem::path& manifest_path,
    const std::filesystem::path& selections_path,
    const std::filesystem::path& queries_path, const RunConfig& config,
    const std::filesystem::path& out_dir, bool use_index = true);

}  // namespace corfl

#endif  // CORFL_PIPELINE_HPP_

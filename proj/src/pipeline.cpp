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

#include "corfl/pipeline.hpp"

#include <map>
#include <sstream>

#include "corfl/error.hpp"
#include "corfl/objective.hpp"
#include "corfl/ped.hpp"
#include "corfl/synth.hpp"
#include "json.hpp"

namespace corfl {
namespace {

using nlohmann::json;

void PrepareDir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIoError,
                "cannot create '" + dir.string() + "': " + ec.message());
  }
}

}  // namespace

SimilarityGraph BuildCategoryGraph(const CandidatePool& pool,
                                   const RunConfig& config, unsigned threads) {
  const std::size_t m = pool.size();
  const std::size_t n = pool.groups.num_groups();
  SquareMatrix distances =
      PedMatrix(pool.fields, config.d_empty, threads, &pool.groups);
  distances = PairwiseSmooth(distances, pool.groups, config.m_keep);
  SquareMatrix similarities = KernelizeMatrix(distances, config.sigma);
  const std::size_t knn = config.knn_k.value_or(n);
  if (knn >= m) {
    throw Error(ErrorCode::kKTooLarge,
                "knn_k=" + std::to_string(knn) + " needs more than " +
                    std::to_string(m) + " candidates");
  }
  return SimilarityGraph::FromDense(SparsifyKnn(similarities, knn));
}

CategoryRun SelectCategory(std::span<const ImageDescriptors> images,
                           const RunConfig& config, unsigned threads) {
  config.Validate();
  if (images.empty()) {
    throw Error(ErrorCode::kEmptyCategory, "category has no images");
  }
  CandidatePool pool =
      BuildCandidatePool(images, config.templates, config.sigma_c);
  SimilarityGraph graph = BuildCategoryGraph(pool, config, threads);
  const Objective objective(
      graph, pool.groups, pool.bias,
      {config.tau, config.ResolvedLambda1Select(), config.lambda2});
  SelectionResult selection =
      GreedyLazy(objective, config.k.value_or(images.size()));
  return {std::move(pool), std::move(graph), std::move(selection)};
}

CategorySelection ToSelectionRecords(const std::string& name,
                                     std::span<const ImageDescriptors> images,
                                     const CategoryRun& run) {
  CategorySelection out;
  out.name = name;
  out.num_images = images.size();
  out.num_candidates = run.pool.size();
  out.evaluations = run.selection.evaluations;
  out.objective = run.selection.objective_trace.empty()
                      ? 0.0
                      : run.selection.objective_trace.back();
  for (std::size_t t = 0; t < run.selection.chosen.size(); ++t) {
    const Index k = run.selection.chosen[t];
    out.records.push_back({images[run.pool.groups.group_of(k)].id,
                           run.pool.template_id[k], run.pool.fields[k].window,
                           run.selection.gains[t]});
  }
  return out;
}

ClassPools PoolsFromSelections(
    const Manifest& manifest, const std::vector<CategorySelection>& selections) {
  if (selections.empty()) {
    throw Error(ErrorCode::kEmptyPools, "selection file lists no categories");
  }
  std::vector<std::vector<ReceptiveField>> fields(selections.size());
  std::vector<std::vector<Index>> chosen(selections.size());
  std::vector<ClassSelection> classes;
  for (std::size_t c = 0; c < selections.size(); ++c) {
    const CategorySelection& sel = selections[c];
    const CategoryEntry& category = manifest.category(sel.name);
    std::map<std::string, const ImageEntry*> by_id;
    for (const auto& e : category.images) by_id[e.id] = &e;
    std::map<std::string, ImageDescriptors> loaded;
    for (const auto& rec : sel.records) {
      auto it = by_id.find(rec.image_id);
      if (it == by_id.end()) {
        throw Error(ErrorCode::kManifestError,
                    "category '" + sel.name + "' has no image '" +
                        rec.image_id + "'");
      }
      auto img = loaded.find(rec.image_id);
      if (img == loaded.end()) {
        img = loaded.emplace(rec.image_id, LoadImage(*it->second)).first;
      }
      fields[c].push_back(BinDescriptors(img->second, rec.window));
      chosen[c].push_back(fields[c].size() - 1);
    }
    classes.push_back({sel.name, fields[c], chosen[c]});
  }
  return BuildPools(classes);
}

std::string PredictionsToJson(const ClassPools& pools,
                              const std::vector<QueryPrediction>& predictions) {
  json records = json::array();
  std::size_t labelled = 0;
  std::size_t correct = 0;
  for (const auto& qp : predictions) {
    const Prediction& p = qp.prediction;
    json scores = json::object();
    for (std::size_t c = 0; c < pools.num_classes(); ++c) {
      scores[pools.name(c)] = p.class_scores[c];
    }
    json rec = {{"query_id", qp.query_id},
                {"predicted", pools.name(p.label)},
                {"score", p.score},
                {"best_candidate", p.best_candidate},
                {"class_scores", std::move(scores)}};
    if (qp.label) {
      rec["label"] = *qp.label;
      ++labelled;
      if (*qp.label == pools.name(p.label)) ++correct;
    }
    records.push_back(std::move(rec));
  }
  json root = {{"predictions", std::move(records)}};
  if (labelled > 0) {
    root["accuracy"] = static_cast<double>(correct) / static_cast<double>(labelled);
    root["labelled_queries"] = labelled;
  }
  return root.dump(2) + "\n";
}

void RunSynthCommand(const RunConfig& config,
                     const std::filesystem::path& out_dir) {
  config.Validate();
  PrepareDir(out_dir);
  const SyntheticInstance instance =
      GenerateSynthetic({config.seed, config.per_cluster, config.stddev});
  DemoParams params;
  params.k = config.k.value_or(6);
  params.tau = config.tau;
  params.lambda1 = config.ResolvedLambda1Synth();
  params.sigma = config.sigma;
  params.record_gain_field = config.gain_trace;
  const DemoResult result = RunDemo(instance, params);

  std::ostringstream points;
  WritePointsCsv(points, instance);
  WriteFile(out_dir / "points.csv", points.str());

  json clusters = json::array();
  for (Index k : result.selection.chosen) {
    clusters.push_back(instance.clusters.group_of(k));
  }
  const json selection = {{"chosen", result.selection.chosen},
                          {"clusters", std::move(clusters)},
                          {"gains", result.selection.gains},
                          {"objective_trace", result.selection.objective_trace},
                          {"evaluations", result.selection.evaluations}};
  WriteFile(out_dir / "selection.json", selection.dump(2) + "\n");

  if (config.gain_trace) {
    std::ostringstream trace;
    WriteGainTraceCsv(trace, instance, result);
    WriteFile(out_dir / "gain_trace.csv", trace.str());
  }

  RunConfig effective = config;
  effective.lambda1 = params.lambda1;
  effective.k = params.k;
  WriteFile(out_dir / "effective_config.txt", effective.Serialize());
}

void RunSelectCommand(const std::filesystem::path& manifest_path,
                      const std::optional<std::string>& category,
                      const RunConfig& config,
                      const std::filesystem::path& out_dir, unsigned threads) {
  config.Validate();
  const Manifest manifest = LoadManifest(manifest_path);
  std::vector<const CategoryEntry*> todo;
  if (category) {
    todo.push_back(&manifest.category(*category));
  } else {
    for (const auto& c : manifest.categories) todo.push_back(&c);
  }
  if (todo.empty()) {
    throw Error(ErrorCode::kManifestError, "manifest lists no categories");
  }
  std::vector<CategorySelection> selections;
  for (const CategoryEntry* c : todo) {
    if (c->images.empty()) {
      throw Error(ErrorCode::kEmptyCategory,
                  "category '" + c->name + "' has no images");
    }
    const std::vector<ImageDescriptors> images = LoadImages(c->images);
    const CategoryRun run = SelectCategory(images, config, threads);
    selections.push_back(ToSelectionRecords(c->name, images, run));
  }
  PrepareDir(out_dir);
  WriteFile(out_dir / "selections.json", SelectionsToJson(selections));
  RunConfig effective = config;
  effective.lambda1 = config.ResolvedLambda1Select();
  WriteFile(out_dir / "effective_config.txt", effective.Serialize());
}

std::optional<double> RunClassifyCommand(
    const std::filesystem::path& manifest_path,
    const std::filesystem::path& selections_path,
    const std::filesystem::path& queries_path, const RunConfig& config,
    const std::filesystem::path& out_dir, bool use_index) {
  config.Validate();
  const Manifest manifest = LoadManifest(manifest_path);
  const Manifest queries = LoadManifest(queries_path);
  const auto selections = SelectionsFromJson(ReadFile(selections_path));
  ClassPools pools = PoolsFromSelections(manifest, selections);
  if (use_index) pools.BuildIndex();

  ClassifierParams params;
  params.lambda2 = config.lambda2;
  params.empty_distance = config.d_empty;
  params.sigma_c = config.sigma_c;
  params.templates = config.templates;

  std::vector<QueryPrediction> predictions;
  std::size_t labelled = 0;
  std::size_t correct = 0;
  for (const ImageEntry& q : queries.queries) {
    const ImageDescriptors image = LoadImage(q);
    QueryPrediction qp{q.id, q.label, Predict(image, pools, params)};
    if (q.label) {
      ++labelled;
      if (*q.label == pools.name(qp.prediction.label)) ++correct;
    }
    predictions.push_back(std::move(qp));
  }
  PrepareDir(out_dir);
  WriteFile(out_dir / "predictions.json", PredictionsToJson(pools, predictions));
  WriteFile(out_dir / "effective_config.txt", config.Serialize());
  if (labelled == 0) return std::nullopt;
  return static_cast<double>(correct) / static_cast<double>(labelled);
}

}  // namespace corfl

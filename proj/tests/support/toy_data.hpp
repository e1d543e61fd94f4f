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

// Small synthetic descriptor datasets for pipeline and classifier tests.

#ifndef CORFL_TESTS_SUPPORT_TOY_DATA_HPP_
#define CORFL_TESTS_SUPPORT_TOY_DATA_HPP_

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "corfl/candidates.hpp"
#include "corfl/io.hpp"
#include "json.hpp"

namespace corfl::testing {

struct ToyClass {
  std::string name;
  std::vector<double> center;  // descriptor cluster center
};

// Descriptors scattered uniformly over the image, vectors drawn around
// `center` with isotropic noise, then unit-normalized.
inline ImageDescriptors MakeToyImage(std::mt19937_64& rng, std::string id,
                                     int width, int height,
                                     const std::vector<double>& center,
                                     std::size_t count, double noise) {
  std::uniform_real_distribution<double> ux(0.0, width);
  std::uniform_real_distribution<double> uy(0.0, height);
  std::normal_distribution<double> n01(0.0, 1.0);
  ImageDescriptors img;
  img.id = std::move(id);
  img.width = width;
  img.height = height;
  img.vectors = DescriptorSet(center.size());
  std::vector<double> v(center.size());
  for (std::size_t i = 0; i < count; ++i) {
    img.positions.push_back({ux(rng), uy(rng)});
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = center[k] + noise * n01(rng);
    img.vectors.Add(v);
  }
  NormalizeDescriptors(img);
  return img;
}

// Class c gets a cluster centred on the c-th basis vector of R^dim.
inline std::vector<ToyClass> BasisClasses(std::size_t num_classes,
                                          std::size_t dim) {
  std::vector<ToyClass> classes;
  for (std::size_t c = 0; c < num_classes; ++c) {
    std::vector<double> center(dim, 0.0);
    center[c % dim] = 1.0;
    classes.push_back({"class" + std::to_string(c), center});
  }
  return classes;
}

struct ToyDatasetOptions {
  std::size_t train_per_class = 3;
  std::size_t query_per_class = 2;
  std::size_t descriptors = 12;
  std::size_t dim = 8;
  int width = 48;
  int height = 48;
  double noise = 0.05;
  std::uint64_t seed = 7;
};

// Writes descriptor files plus manifest.json (categories and labelled
// queries) under `dir`. Returns the manifest path.
inline std::filesystem::path WriteToyDataset(const std::filesystem::path& dir,
                                             const std::vector<ToyClass>& classes,
                                             const ToyDatasetOptions& opts) {
  std::filesystem::create_directories(dir / "desc");
  std::mt19937_64 rng(opts.seed);
  nlohmann::json cats = nlohmann::json::array();
  nlohmann::json queries = nlohmann::json::array();
  auto emit = [&](const std::string& id, const ToyClass& cls) {
    const ImageDescriptors img = MakeToyImage(rng, id, opts.width, opts.height,
                                              cls.center, opts.descriptors,
                                              opts.noise);
    std::ofstream out(dir / "desc" / (id + ".txt"));
    WriteDescriptors(out, img);
    return nlohmann::json{{"id", id},
                          {"width", opts.width},
                          {"height", opts.height},
                          {"descriptors", "desc/" + id + ".txt"}};
  };
  for (const ToyClass& cls : classes) {
    nlohmann::json images = nlohmann::json::array();
    for (std::size_t n = 0; n < opts.train_per_class; ++n) {
      images.push_back(emit(cls.name + "_train" + std::to_string(n), cls));
    }
    cats.push_back({{"name", cls.name}, {"images", std::move(images)}});
    for (std::size_t n = 0; n < opts.query_per_class; ++n) {
      auto q = emit(cls.name + "_query" + std::to_string(n), cls);
      q["label"] = cls.name;
      queries.push_back(std::move(q));
    }
  }
  const auto path = dir / "manifest.json";
  std::ofstream(path) << nlohmann::json{{"categories", cats}, {"queries", queries}}.dump(2);
  return path;
}

inline std::filesystem::path FreshDir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("corfl_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace corfl::testing

#endif  // CORFL_TESTS_SUPPORT_TOY_DATA_HPP_

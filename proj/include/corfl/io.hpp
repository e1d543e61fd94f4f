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

#ifndef CORFL_IO_HPP_
#define CORFL_IO_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "corfl/candidates.hpp"
#include "corfl/graph.hpp"
#include "corfl/matrix.hpp"

namespace corfl {

// Matrix text format: first line "M", then M lines of M reals. Non-edges in
// distance matrices are written as "inf".
void WriteMatrix(std::ostream& out, const SquareMatrix& matrix);
SquareMatrix ReadMatrix(std::istream& in);

void WriteGraph(std::ostream& out, const SimilarityGraph& graph);
// Reads a matrix and validates it as a graph (symmetry included).
SimilarityGraph ReadGraph(std::istream& in);

// Descriptor file: one "x y v1 ... vp" line per descriptor. Blank lines and
// lines starting with '#' are skipped. Fills positions and vectors of
// `image`; vectors are L2-normalized when `normalize` is set.
void ReadDescriptors(std::istream& in, ImageDescriptors& image,
                     bool normalize = true);
void WriteDescriptors(std::ostream& out, const ImageDescriptors& image);

struct ImageEntry {
  std::string id;
  int width = 0;
  int height = 0;
  std::filesystem::path descriptors;  // absolute or manifest-relative
  std::optional<std::string> label;   // queries only
};

struct CategoryEntry {
  std::string name;
  std::vector<ImageEntry> images;
};

// JSON manifest:
//   {"categories": [{"name": ..., "images": [{"id", "width", "height",
//                                             "descriptors"}]}],
//    "queries": [{"id", "width", "height", "descriptors", "label"?}]}
// Descriptor paths are resolved against the manifest directory.
struct Manifest {
  std::vector<CategoryEntry> categories;
  std::vector<ImageEntry> queries;

  const CategoryEntry& category(const std::string& name) const;
};

Manifest ParseManifest(const std::string& text,
                       const std::filesystem::path& base_dir);
Manifest LoadManifest(const std::filesystem::path& path);

ImageDescriptors LoadImage(const ImageEntry& entry, bool normalize = true);
std::vector<ImageDescriptors> LoadImages(const std::vector<ImageEntry>& entries,
                                         bool normalize = true);

struct SelectionRecord {
  std::string image_id;
  std::size_t template_id = 0;
  Rect window;
  double gain = 0.0;
};

struct CategorySelection {
  std::string name;
  std::size_t num_images = 0;
  std::size_t num_candidates = 0;
  std::uint64_t evaluations = 0;
  double objective = 0.0;
  std::vector<SelectionRecord> records;
};

std::string SelectionsToJson(const std::vector<CategorySelection>& selections);
std::vector<CategorySelection> SelectionsFromJson(const std::string& text);

std::string ReadFile(const std::filesystem::path& path);
// Truncates and writes `contents`.
void WriteFile(const std::filesystem::path& path, const std::string& contents);

}  // namespace corfl

#endif  // CORFL_IO_HPP_

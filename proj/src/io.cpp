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

#include "corfl/io.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "corfl/config.hpp"
#include "corfl/error.hpp"
#include "json.hpp"

namespace corfl {
namespace {

using nlohmann::json;

bool ParseReal(const std::string& token, double& out) {
  if (token == "inf" || token == "+inf") {
    out = std::numeric_limits<double>::infinity();
    return true;
  }
  char* end = nullptr;
  out = std::strtod(token.c_str(), &end);
  return !token.empty() && end == token.c_str() + token.size() &&
         !std::isnan(out);
}

std::string FormatReal(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return FormatDouble(v);
}

[[noreturn]] void ManifestFail(const std::string& why) {
  throw Error(ErrorCode::kManifestError, why);
}

template <typename T>
T Field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    ManifestFail(where + ": missing field '" + key + "'");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    ManifestFail(where + ": field '" + key + "' has the wrong type");
  }
}

ImageEntry ParseImage(const json& obj, const std::filesystem::path& base,
                      const std::string& where) {
  ImageEntry entry;
  entry.id = Field<std::string>(obj, "id", where);
  entry.width = Field<int>(obj, "width", where + " '" + entry.id + "'");
  entry.height = Field<int>(obj, "height", where + " '" + entry.id + "'");
  const std::filesystem::path p =
      Field<std::string>(obj, "descriptors", where + " '" + entry.id + "'");
  entry.descriptors = p.is_absolute() ? p : base / p;
  if (obj.contains("label")) {
    entry.label = Field<std::string>(obj, "label", where + " '" + entry.id + "'");
  }
  if (entry.width <= 0 || entry.height <= 0) {
    ManifestFail(where + " '" + entry.id + "': width and height must be > 0");
  }
  return entry;
}

}  // namespace

void WriteMatrix(std::ostream& out, const SquareMatrix& matrix) {
  const std::size_t m = matrix.size();
  out << m << '\n';
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      if (j) out << ' ';
      out << FormatReal(matrix(i, j));
    }
    out << '\n';
  }
}

SquareMatrix ReadMatrix(std::istream& in) {
  std::string token;
  if (!(in >> token)) throw Error(ErrorCode::kParseError, "missing size line");
  std::size_t m = 0;
  try {
    std::size_t used = 0;
    m = std::stoul(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParseError, "bad size '" + token + "'");
  }
  std::vector<double> values;
  values.reserve(m * m);
  for (std::size_t n = 0; n < m * m; ++n) {
    double v = 0.0;
    if (!(in >> token) || !ParseReal(token, v)) {
      throw Error(ErrorCode::kParseError,
                  "expected " + std::to_string(m * m) + " reals, failed at " +
                      std::to_string(n));
    }
    values.push_back(v);
  }
  if (in >> token) {
    throw Error(ErrorCode::kNonSquare, "trailing values after the matrix");
  }
  return SquareMatrix(m, std::move(values));
}

void WriteGraph(std::ostream& out, const SimilarityGraph& graph) {
  WriteMatrix(out, graph.weights());
}

SimilarityGraph ReadGraph(std::istream& in) {
  return SimilarityGraph::FromDense(ReadMatrix(in));
}

void ReadDescriptors(std::istream& in, ImageDescriptors& image,
                     bool normalize) {
  image.positions.clear();
  image.vectors = DescriptorSet();
  std::string line;
  std::vector<double> row;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string token;
    row.clear();
    while (fields >> token) {
      double v = 0.0;
      if (!ParseReal(token, v) || !std::isfinite(v)) {
        throw Error(ErrorCode::kParseError,
                    "image '" + image.id + "' line " + std::to_string(line_no) +
                        ": bad number '" + token + "'");
      }
      row.push_back(v);
    }
    if (row.size() < 3) {
      throw Error(ErrorCode::kParseError,
                  "image '" + image.id + "' line " + std::to_string(line_no) +
                      ": expected x y and at least one descriptor value");
    }
    if (!image.vectors.empty() && row.size() - 2 != image.vectors.dim()) {
      throw Error(ErrorCode::kParseError,
                  "image '" + image.id + "' line " + std::to_string(line_no) +
                      ": descriptor dimension changes");
    }
    image.positions.push_back({row[0], row[1]});
    image.vectors.Add(std::span<const double>(row).subspan(2));
  }
  image.Validate();
  if (normalize) NormalizeDescriptors(image);
}

void WriteDescriptors(std::ostream& out, const ImageDescriptors& image) {
  for (std::size_t n = 0; n < image.size(); ++n) {
    out << FormatReal(image.positions[n].x) << ' '
        << FormatReal(image.positions[n].y);
    for (double v : image.vectors[n]) out << ' ' << FormatReal(v);
    out << '\n';
  }
}

const CategoryEntry& Manifest::category(const std::string& name) const {
  for (const auto& c : categories) {
    if (c.name == name) return c;
  }
  throw Error(ErrorCode::kManifestError, "no category '" + name + "'");
}

Manifest ParseManifest(const std::string& text,
                       const std::filesystem::path& base_dir) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    ManifestFail(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) ManifestFail("manifest must be a JSON object");
  Manifest manifest;
  if (root.contains("categories")) {
    const json& cats = root.at("categories");
    if (!cats.is_array()) ManifestFail("'categories' must be an array");
    for (const json& c : cats) {
      CategoryEntry entry;
      entry.name = Field<std::string>(c, "name", "category");
      const json images = Field<json>(c, "images", "category '" + entry.name + "'");
      if (!images.is_array()) {
        ManifestFail("category '" + entry.name + "': 'images' must be an array");
      }
      for (const json& img : images) {
        entry.images.push_back(
            ParseImage(img, base_dir, "category '" + entry.name + "' image"));
      }
      for (const auto& other : manifest.categories) {
        if (other.name == entry.name) {
          ManifestFail("duplicate category '" + entry.name + "'");
        }
      }
      manifest.categories.push_back(std::move(entry));
    }
  }
  if (root.contains("queries")) {
    const json& queries = root.at("queries");
    if (!queries.is_array()) ManifestFail("'queries' must be an array");
    for (const json& q : queries) {
      manifest.queries.push_back(ParseImage(q, base_dir, "query"));
    }
  }
  for (const auto& key : root.items()) {
    if (key.key() != "categories" && key.key() != "queries") {
      ManifestFail("unknown top-level field '" + key.key() + "'");
    }
  }
  return manifest;
}

Manifest LoadManifest(const std::filesystem::path& path) {
  std::string text;
  try {
    text = ReadFile(path);
  } catch (const Error& e) {
    ManifestFail(e.what());
  }
  return ParseManifest(text, path.parent_path());
}

ImageDescriptors LoadImage(const ImageEntry& entry, bool normalize) {
  ImageDescriptors image;
  image.id = entry.id;
  image.width = entry.width;
  image.height = entry.height;
  std::ifstream in(entry.descriptors);
  if (!in) {
    throw Error(ErrorCode::kIoError,
                "cannot open descriptors '" + entry.descriptors.string() + "'");
  }
  ReadDescriptors(in, image, normalize);
  return image;
}

std::vector<ImageDescriptors> LoadImages(const std::vector<ImageEntry>& entries,
                                         bool normalize) {
  std::vector<ImageDescriptors> images;
  images.reserve(entries.size());
  for (const auto& e : entries) images.push_back(LoadImage(e, normalize));
  return images;
}

std::string SelectionsToJson(const std::vector<CategorySelection>& selections) {
  json cats = json::array();
  for (const auto& sel : selections) {
    json records = json::array();
    for (const auto& r : sel.records) {
      records.push_back({{"image_id", r.image_id},
                         {"template_id", r.template_id},
                         {"window", {r.window.x0, r.window.y0, r.window.w,
                                     r.window.h}},
                         {"gain", r.gain}});
    }
    cats.push_back({{"name", sel.name},
                    {"num_images", sel.num_images},
                    {"num_candidates", sel.num_candidates},
                    {"evaluations", sel.evaluations},
                    {"objective", sel.objective},
                    {"selections", std::move(records)}});
  }
  return json{{"categories", std::move(cats)}}.dump(2) + "\n";
}

std::vector<CategorySelection> SelectionsFromJson(const std::string& text) {
  std::vector<CategorySelection> out;
  try {
    const json root = json::parse(text);
    for (const json& c : root.at("categories")) {
      CategorySelection sel;
      sel.name = c.at("name").get<std::string>();
      sel.num_images = c.at("num_images").get<std::size_t>();
      sel.num_candidates = c.at("num_candidates").get<std::size_t>();
      sel.evaluations = c.at("evaluations").get<std::uint64_t>();
      sel.objective = c.at("objective").get<double>();
      for (const json& r : c.at("selections")) {
        SelectionRecord rec;
        rec.image_id = r.at("image_id").get<std::string>();
        rec.template_id = r.at("template_id").get<std::size_t>();
        const auto w = r.at("window").get<std::vector<int>>();
        if (w.size() != 4) throw std::invalid_argument("window needs 4 values");
        rec.window = {w[0], w[1], w[2], w[3]};
        rec.gain = r.at("gain").get<double>();
        sel.records.push_back(std::move(rec));
      }
      out.push_back(std::move(sel));
    }
  } catch (const std::exception& e) {
    throw Error(ErrorCode::kParseError,
                std::string("invalid selection file: ") + e.what());
  }
  return out;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + path.string() + "'");
  out << contents;
  if (!out) throw Error(ErrorCode::kIoError, "write failed for '" + path.string() + "'");
}

}  // namespace corfl

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

#ifndef CORFL_CANDIDATES_HPP_
#define CORFL_CANDIDATES_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "corfl/descriptors.hpp"
#include "corfl/graph.hpp"

namespace corfl {

// Local descriptors of one image; positions[i] is the pixel location of
// vectors[i].
struct ImageDescriptors {
  std::string id;
  int width = 0;
  int height = 0;
  std::vector<Point2> positions;
  DescriptorSet vectors;

  std::size_t size() const { return positions.size(); }
  // Checks position bounds and the position/vector count match.
  void Validate() const;
};

// Scales each descriptor to unit L2 norm; zero vectors are left unchanged.
void NormalizeDescriptors(ImageDescriptors& image);

// Window geometry: one window size per scale (fraction of the image side),
// placed at an anchors x anchors grid of top-left corners.
struct TemplateConfig {
  std::vector<double> scales = {0.50, 0.65, 0.80, 0.95};
  int anchors = 8;

  std::size_t count() const {
    return scales.size() * static_cast<std::size_t>(anchors * anchors);
  }
  void Validate() const;
};

inline constexpr int kMinImageSide = 16;

// Scale-major, then row-major (y anchor outer, x anchor inner) windows.
std::vector<Rect> MakeTemplates(int width, int height,
                                const TemplateConfig& config = {});

// Assigns every descriptor inside the half-open window to one cell per
// pyramid level; cell indices are clamped to the last row/column.
ReceptiveField BinDescriptors(const ImageDescriptors& image, const Rect& rect);

struct CandidatePool {
  std::vector<ReceptiveField> fields;  // image-major
  std::vector<std::size_t> template_id;
  GroupIndex groups;
  CenterBias bias;
  std::size_t templates_per_image = 0;

  std::size_t size() const { return fields.size(); }
};

CandidatePool BuildCandidatePool(std::span<const ImageDescriptors> images,
                                 const TemplateConfig& templates = {},
                                 double sigma_c = kDefaultCenterSigma);

// Windows and center weights of one image, without binning.
CenterBias TemplateCenterBias(int width, int height,
                              std::span<const Rect> rects,
                              double sigma_c = kDefaultCenterSigma);

}  // namespace corfl

#endif  // CORFL_CANDIDATES_HPP_

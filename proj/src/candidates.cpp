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

#include "corfl/candidates.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "corfl/error.hpp"

namespace corfl {

void ImageDescriptors::Validate() const {
  if (positions.size() != vectors.size()) {
    throw Error(ErrorCode::kInvalidDescriptor,
                "image '" + id + "': position and vector counts differ");
  }
  for (const Point2& p : positions) {
    if (!(p.x >= 0.0 && p.x < width && p.y >= 0.0 && p.y < height)) {
      throw Error(ErrorCode::kInvalidDescriptor,
                  "image '" + id + "': descriptor outside the image");
    }
  }
  for (double v : vectors.values()) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kInvalidDescriptor,
                  "image '" + id + "': non-finite descriptor value");
    }
  }
}

void NormalizeDescriptors(ImageDescriptors& image) {
  const std::size_t dim = image.vectors.dim();
  std::vector<double> values = image.vectors.values();
  for (std::size_t i = 0; i < image.vectors.size(); ++i) {
    double norm = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      norm += values[i * dim + k] * values[i * dim + k];
    }
    norm = std::sqrt(norm);
    if (norm > 0.0) {
      for (std::size_t k = 0; k < dim; ++k) values[i * dim + k] /= norm;
    }
  }
  image.vectors = DescriptorSet(dim, std::move(values));
}

void TemplateConfig::Validate() const {
  if (scales.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "at least one scale is required");
  }
  for (double f : scales) {
    if (!(f > 0.0 && f <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "scales must lie in (0, 1]");
    }
  }
  if (anchors < 1) {
    throw Error(ErrorCode::kInvalidArgument, "anchors must be >= 1");
  }
}

std::vector<Rect> MakeTemplates(int width, int height,
                                const TemplateConfig& config) {
  config.Validate();
  if (width < kMinImageSide || height < kMinImageSide) {
    throw Error(ErrorCode::kImageTooSmall,
                std::to_string(width) + "x" + std::to_string(height) +
                    " is below the minimum side of " +
                    std::to_string(kMinImageSide));
  }
  std::vector<Rect> rects;
  rects.reserve(config.count());
  const int steps = config.anchors - 1;
  auto corner = [steps](int slack, int i) -> int {
    if (steps == 0) return static_cast<int>(std::lround(0.5 * slack));
    return static_cast<int>(
        std::lround(static_cast<double>(i) * slack / steps));
  };
  for (double f : config.scales) {
    const int w = std::max(1, static_cast<int>(std::lround(f * width)));
    const int h = std::max(1, static_cast<int>(std::lround(f * height)));
    for (int j = 0; j < config.anchors; ++j) {
      for (int i = 0; i < config.anchors; ++i) {
        rects.push_back({corner(width - w, i), corner(height - h, j), w, h});
      }
    }
  }
  return rects;
}

ReceptiveField BinDescriptors(const ImageDescriptors& image, const Rect& rect) {
  if (rect.w <= 0 || rect.h <= 0 || rect.x0 < 0 || rect.y0 < 0 ||
      rect.x0 + rect.w > image.width || rect.y0 + rect.h > image.height) {
    throw Error(ErrorCode::kRectOutOfBounds,
                "window outside image '" + image.id + "'");
  }
  ReceptiveField rf;
  rf.window = rect;
  const std::size_t dim = image.vectors.dim();
  for (DescriptorSet& cell : rf.cells) cell = DescriptorSet(dim);

  for (std::size_t n = 0; n < image.size(); ++n) {
    const double dx = image.positions[n].x - rect.x0;
    const double dy = image.positions[n].y - rect.y0;
    if (dx < 0.0 || dx >= rect.w || dy < 0.0 || dy >= rect.h) continue;
    for (std::size_t level = 0; level < kPyramidLevels.size(); ++level) {
      const int g = kPyramidLevels[level];
      const int cx = std::min(g - 1, static_cast<int>(std::floor(g * dx / rect.w)));
      const int cy = std::min(g - 1, static_cast<int>(std::floor(g * dy / rect.h)));
      rf.cells[LevelOffset(level) + static_cast<std::size_t>(cy * g + cx)].Add(
          image.vectors[n]);
    }
  }
  return rf;
}

CenterBias TemplateCenterBias(int width, int height,
                              std::span<const Rect> rects, double sigma_c) {
  std::vector<Point2> centers;
  centers.reserve(rects.size());
  for (const Rect& r : rects) centers.push_back({r.center_x(), r.center_y()});
  const GroupIndex one_image(std::vector<std::uint32_t>(rects.size(), 0),
                             rects.empty() ? 0 : 1);
  const ImageSize dims{static_cast<double>(width), static_cast<double>(height)};
  return CenterBiasFromPositions(centers, one_image,
                                 std::span<const ImageSize>(&dims, rects.empty() ? 0 : 1),
                                 sigma_c);
}

CandidatePool BuildCandidatePool(std::span<const ImageDescriptors> images,
                                 const TemplateConfig& templates,
                                 double sigma_c) {
  if (images.empty()) {
    throw Error(ErrorCode::kEmptyCategory, "no images to build candidates from");
  }
  CandidatePool pool;
  pool.templates_per_image = templates.count();
  std::vector<std::uint32_t> group_of;
  std::vector<Point2> centers;
  std::vector<ImageSize> dims;
  for (std::size_t n = 0; n < images.size(); ++n) {
    const ImageDescriptors& image = images[n];
    image.Validate();
    const std::vector<Rect> rects =
        MakeTemplates(image.width, image.height, templates);
    for (std::size_t t = 0; t < rects.size(); ++t) {
      pool.fields.push_back(BinDescriptors(image, rects[t]));
      pool.template_id.push_back(t);
      group_of.push_back(static_cast<std::uint32_t>(n));
      centers.push_back({rects[t].center_x(), rects[t].center_y()});
    }
    dims.push_back({static_cast<double>(image.width),
                    static_cast<double>(image.height)});
  }
  pool.groups = GroupIndex(std::move(group_of), images.size());
  pool.bias = CenterBiasFromPositions(centers, pool.groups, dims, sigma_c);
  return pool;
}

}  // namespace corfl

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

#include "corfl/error.hpp"

namespace corfl {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNonSquare: return "NonSquare";
    case ErrorCode::kNegativeWeight: return "NegativeWeight";
    case ErrorCode::kAsymmetryBeyondTolerance: return "AsymmetryBeyondTolerance";
    case ErrorCode::kOutOfBoundsCenter: return "OutOfBoundsCenter";
    case ErrorCode::kNonPositiveSigma: return "NonPositiveSigma";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kDuplicateIndex: return "DuplicateIndex";
    case ErrorCode::kNonPositiveLogArgument: return "NonPositiveLogArgument";
    case ErrorCode::kAlreadySelected: return "AlreadySelected";
    case ErrorCode::kKOutOfRange: return "KOutOfRange";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNegativeDistance: return "NegativeDistance";
    case ErrorCode::kKTooLarge: return "KTooLarge";
    case ErrorCode::kImageTooSmall: return "ImageTooSmall";
    case ErrorCode::kRectOutOfBounds: return "RectOutOfBounds";
    case ErrorCode::kInvalidDescriptor: return "InvalidDescriptor";
    case ErrorCode::kEmptyPools: return "EmptyPools";
    case ErrorCode::kNoDescriptors: return "NoDescriptors";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kManifestError: return "ManifestError";
    case ErrorCode::kEmptyCategory: return "EmptyCategory";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace corfl

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

#ifndef CORFL_ERROR_HPP_
#define CORFL_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace corfl {

enum class ErrorCode {
  kInvalidArgument,
  kNonSquare,
  kNegativeWeight,
  kAsymmetryBeyondTolerance,
  kOutOfBoundsCenter,
  kNonPositiveSigma,
  kIndexOutOfRange,
  kDuplicateIndex,
  kNonPositiveLogArgument,
  kAlreadySelected,
  kKOutOfRange,
  kDimensionMismatch,
  kNegativeDistance,
  kKTooLarge,
  kImageTooSmall,
  kRectOutOfBounds,
  kInvalidDescriptor,
  kEmptyPools,
  kNoDescriptors,
  kParseError,
  kManifestError,
  kEmptyCategory,
  kConfigError,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported as corfl::Error; code() identifies the
// violated precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace corfl

#endif  // CORFL_ERROR_HPP_

// Copyright 2026 The tsow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TSOW_ERROR_H
#define TSOW_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace tsow {

enum class ErrorCode {
    kSizeLimit,
    kInvalidSubset,
    kInvalidProblem,
    kLayoutMismatch,
    kPhaseNeedsBinary,
    kUnknownOutcome,
    kLengthMismatch,
    kNotUnitary,
    kUseLongVariant,
    kCalibrationFailed,
    kSamplingStall,
    kOutputNotCanonical,
    kInvalidPair,
    kInstanceMismatch,
    kNoValidPair,
    kModeNotSupported,
    kUndetermined,
    kSearchBudgetExceeded,
    kConfig,
    kVerificationFailed,
};

/// Stable upper-snake name used in reports and CLI error objects.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code), detail_(message) {}

    ErrorCode code() const { return code_; }
    const std::string &detail() const { return detail_; }

   private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace tsow

#endif

// Copyright 2026 The truthful-arch Authors
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

#ifndef TRUTHFUL_ARCH_ERROR_H_
#define TRUTHFUL_ARCH_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace truthful_arch {

enum class ErrorCode {
  kParseError,
  kInvalidScenario,
  kBenefitOutOfRange,
  kNonPositiveCost,
  kDimensionMismatch,
  kMissingActualBenefits,
  kScoreOutOfRange,
  kUnknownMechanism,
  kInvalidDictator,
  kInvalidArgument,
  kGridTooFine,
  kBudgetExceeded,
  kFileNotFound,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }
  // The message without the code prefix.
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace truthful_arch

#endif  // TRUTHFUL_ARCH_ERROR_H_

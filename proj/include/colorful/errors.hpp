// Copyright 2026 The colorful-lp Authors
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

#ifndef COLORFUL_ERRORS_HPP_
#define COLORFUL_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace clp {

enum class ErrorKind {
  kMalformedInput,
  kDimensionOrEmpty,
  kBudgetExceeded,
  kDegenerateTransversal,
  kDegenerateState,
  kDegeneratePivot,
  kHypothesisViolated,
  kCycleDetected,
  kNotSeparable,
  kNonPositiveEntries,
  kOracleInconsistent,
  kNotAnEquilibrium,
  kInvalidFamily,
  kVerificationFailed,
};

std::string_view error_kind_name(ErrorKind kind);

class ClpError : public std::runtime_error {
 public:
  ClpError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace clp

#endif  // COLORFUL_ERRORS_HPP_

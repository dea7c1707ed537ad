// Copyright 2026 The Coherence Forge Authors
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

#ifndef COHERENCE_ERRORS_H_
#define COHERENCE_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace coherence {

enum class ErrorCode {
  kNonHermitian,
  kDimMismatch,
  kNotPsd,
  kNotNormalized,
  kPureInput,
  kEpsOutOfRange,
  kAlphaOutOfRange,
  kIncommensurateSpectrum,
  kPeriodMismatch,
  kGcdNotOne,
  kSearchExhausted,
  kZeroVariance,
  kZeroNu,
  kZeroTargetVariance,
  kZeroTargetQfi,
  kSolverStall,
  kSchemaError,
  kValidationError,
  kUsageError,
  kInvalidArgument,
};

std::string_view error_name(ErrorCode code);

// Errors that come from bad input rather than a broken numerical contract.
bool is_input_error(ErrorCode code);

class CoherenceError : public std::runtime_error {
 public:
  CoherenceError(ErrorCode code, const std::string& message);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coherence

#endif  // COHERENCE_ERRORS_H_

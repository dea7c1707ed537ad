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

#include "coherence/errors.h"

namespace coherence {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonHermitian: return "NonHermitian";
    case ErrorCode::kDimMismatch: return "DimMismatch";
    case ErrorCode::kNotPsd: return "NotPSD";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kPureInput: return "PureInput";
    case ErrorCode::kEpsOutOfRange: return "EpsOutOfRange";
    case ErrorCode::kAlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::kIncommensurateSpectrum: return "IncommensurateSpectrum";
    case ErrorCode::kPeriodMismatch: return "PeriodMismatch";
    case ErrorCode::kGcdNotOne: return "GcdNotOne";
    case ErrorCode::kSearchExhausted: return "SearchExhausted";
    case ErrorCode::kZeroVariance: return "ZeroVariance";
    case ErrorCode::kZeroNu: return "ZeroNu";
    case ErrorCode::kZeroTargetVariance: return "ZeroTargetVariance";
    case ErrorCode::kZeroTargetQfi: return "ZeroTargetQFI";
    case ErrorCode::kSolverStall: return "SolverStall";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kUsageError: return "UsageError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) {
  return code != ErrorCode::kSolverStall;
}

CoherenceError::CoherenceError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message),
      code_(code) {}

}  // namespace coherence

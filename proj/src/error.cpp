// Copyright 2026 The powerspec Authors
//
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


#include "powerspec/error.hpp"

namespace powerspec {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidFamilyParameters: return "InvalidFamilyParameters";
    case ErrorCode::kInvalidGroupTable: return "InvalidGroupTable";
    case ErrorCode::kInvalidGraph: return "InvalidGraph";
    case ErrorCode::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kNotAPartition: return "NotAPartition";
    case ErrorCode::kNotEquitable: return "NotEquitable";
    case ErrorCode::kDiameterExceedsTwo: return "DiameterExceedsTwo";
    case ErrorCode::kFamilyMismatch: return "FamilyMismatch";
    case ErrorCode::kNotSquare: return "NotSquare";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInternalExactnessViolation: return "InternalExactnessViolation";
    case ErrorCode::kInexactDivision: return "InexactDivision";
    case ErrorCode::kBitLimitExceeded: return "BitLimitExceeded";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kPartNotComplete: return "PartNotComplete";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArguments: return "InvalidArguments";
  }
  return "Unknown";
}

}  // namespace powerspec

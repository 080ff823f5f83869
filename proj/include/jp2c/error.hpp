// Copyright 2026 The jp2c Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jp2c {

enum class ErrorCode {
  kInvalidArgument,
  kCardinalityMismatch,
  kCardinalityOrder,
  kNoNeighbors,
  kNotAVertex,
  kEqualEndpoints,
  kTooFewVertices,
  kBadQuad,
  kOutOfTheoremRange,
  kLemmaPreconditionViolated,
  kSelectionExhausted,
  kSpliceEdgeNotFound,
  kTooLargeForOracle,
  kSweepBudget,
  kConstructionCheckFailed,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kCardinalityMismatch: return "CardinalityMismatch";
    case ErrorCode::kCardinalityOrder: return "CardinalityOrder";
    case ErrorCode::kNoNeighbors: return "NoNeighbors";
    case ErrorCode::kNotAVertex: return "NotAVertex";
    case ErrorCode::kEqualEndpoints: return "EqualEndpoints";
    case ErrorCode::kTooFewVertices: return "TooFewVertices";
    case ErrorCode::kBadQuad: return "BadQuad";
    case ErrorCode::kOutOfTheoremRange: return "OutOfTheoremRange";
    case ErrorCode::kLemmaPreconditionViolated: return "LemmaPreconditionViolated";
    case ErrorCode::kSelectionExhausted: return "SelectionExhausted";
    case ErrorCode::kSpliceEdgeNotFound: return "SpliceEdgeNotFound";
    case ErrorCode::kTooLargeForOracle: return "TooLargeForOracle";
    case ErrorCode::kSweepBudget: return "SweepBudget";
    case ErrorCode::kConstructionCheckFailed: return "ConstructionCheckFailed";
  }
  return "Unknown";
}

/// The single exception type thrown by the library. `code()` identifies the
/// contract that was violated; `what()` carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace jp2c

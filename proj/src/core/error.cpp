// Copyright 2026 The artk Authors
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

#include "artk/core/error.hpp"

namespace artk {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kDimensionMismatch: return "dimension mismatch";
    case ErrorCode::kEmptyInput: return "empty input";
    case ErrorCode::kNotFound: return "not found";
    case ErrorCode::kStageMismatch: return "stage mismatch";
    case ErrorCode::kNoMatch: return "no match";
    case ErrorCode::kIo: return "i/o error";
    case ErrorCode::kFormat: return "format error";
    case ErrorCode::kZeroProbability: return "zero probability";
  }
  return "unknown error";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

StageError::StageError(std::string stage, ErrorCode code, const std::string& message)
    : Error(code, stage + ": " + message), stage_(std::move(stage)) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace artk

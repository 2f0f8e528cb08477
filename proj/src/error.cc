// Copyright 2026 The Typogen Authors
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

#include "typogen/error.h"

#include <fmt/format.h>

namespace typogen {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kCharacterNotInLayout: return "character-not-in-layout";
    case ErrorCode::kNoNeighbor: return "no-neighbor";
    case ErrorCode::kInvalidLayout: return "invalid-layout";
    case ErrorCode::kEmptyDistribution: return "empty-distribution";
    case ErrorCode::kRateUnreachable: return "rate-unreachable";
    case ErrorCode::kFormat: return "format-error";
    case ErrorCode::kVersion: return "version-error";
    case ErrorCode::kAlignmentViolation: return "alignment-violation";
    case ErrorCode::kEmptySuggestion: return "empty-suggestion";
    case ErrorCode::kNoEdits: return "no-edits";
    case ErrorCode::kEmptyCorpus: return "empty-corpus";
    case ErrorCode::kNoUsablePairs: return "zero-usable-pairs";
    case ErrorCode::kIo: return "io-error";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(fmt::format("{}: {}", ErrorCodeName(code), message)),
      code_(code) {}

Error Error::InContext(const Error& inner, std::string_view context) {
  return Error(Verbatim{}, inner.code(), fmt::format("{}: {}", context, inner.what()));
}

RateUnreachableError::RateUnreachableError(double requested,
                                           double max_achievable, bool clamped)
    : Error(ErrorCode::kRateUnreachable,
            fmt::format("requested character error rate {:.6g} exceeds the "
                        "maximum achievable rate {:.6g} {}",
                        requested, max_achievable,
                        clamped ? "at full saturation" : "without clamping")),
      requested_(requested),
      max_achievable_(max_achievable) {}

}  // namespace typogen

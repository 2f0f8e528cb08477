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

#ifndef TYPOGEN_ERROR_H_
#define TYPOGEN_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace typogen {

enum class ErrorCode {
  kInvalidArgument,
  kCharacterNotInLayout,
  kNoNeighbor,
  kInvalidLayout,
  kEmptyDistribution,
  kRateUnreachable,
  kFormat,
  kVersion,
  kAlignmentViolation,
  kEmptySuggestion,
  kNoEdits,
  kEmptyCorpus,
  kNoUsablePairs,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure reported by the library is an Error carrying a code that
// callers (and tests) can switch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

  // Same code, message prefixed with `context` (e.g. a pipeline stage).
  static Error InContext(const Error& inner, std::string_view context);

 private:
  struct Verbatim {};
  Error(Verbatim, ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code_;
};

// Raised by calibration when the requested rate is out of reach: it would
// need a probability above 1, or exceeds full saturation when clamping.
class RateUnreachableError : public Error {
 public:
  // `clamped`: whether the maximum already allows clamping.
  RateUnreachableError(double requested, double max_achievable, bool clamped = false);

  double requested() const { return requested_; }
  double max_achievable() const { return max_achievable_; }

 private:
  double requested_;
  double max_achievable_;
};

}  // namespace typogen

#endif  // TYPOGEN_ERROR_H_

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

#ifndef TYPOGEN_CATEGORY_H_
#define TYPOGEN_CATEGORY_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace typogen {

// The five typing error families. The enumerator order is the column order
// of every category table the toolkit emits.
enum class ErrorCategory {
  kSubstitution = 0,
  kInsertion = 1,
  kReplication = 2,
  kDeletion = 3,
  kTransposition = 4,
};

inline constexpr std::size_t kNumCategories = 5;

inline constexpr std::array<ErrorCategory, kNumCategories> kAllCategories = {
    ErrorCategory::kSubstitution, ErrorCategory::kInsertion,
    ErrorCategory::kReplication, ErrorCategory::kDeletion,
    ErrorCategory::kTransposition};

// Where an inserted character sits relative to the character it is
// attributed to.
enum class InsertionSide { kBefore, kAfter };

std::string_view CategoryName(ErrorCategory category);
std::optional<ErrorCategory> ParseCategory(std::string_view name);

inline std::size_t CategoryIndex(ErrorCategory category) {
  return static_cast<std::size_t>(category);
}

}  // namespace typogen

#endif  // TYPOGEN_CATEGORY_H_

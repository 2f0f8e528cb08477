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

#include "typogen/category.h"

namespace typogen {

std::string_view CategoryName(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kSubstitution: return "substitution";
    case ErrorCategory::kInsertion: return "insertion";
    case ErrorCategory::kReplication: return "replication";
    case ErrorCategory::kDeletion: return "deletion";
    case ErrorCategory::kTransposition: return "transposition";
  }
  return "unknown";
}

std::optional<ErrorCategory> ParseCategory(std::string_view name) {
  for (ErrorCategory category : kAllCategories) {
    if (CategoryName(category) == name) return category;
  }
  return std::nullopt;
}

}  // namespace typogen

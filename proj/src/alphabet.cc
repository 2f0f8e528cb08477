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

#include "typogen/alphabet.h"

#include "typogen/error.h"

namespace typogen {

Alphabet Alphabet::Lowercase() {
  return Alphabet("abcdefghijklmnopqrstuvwxyz");
}

Alphabet::Alphabet(std::string_view chars) : chars_(chars) {
  index_.fill(-1);
  for (int i = 0; i < size(); ++i) {
    auto& slot = index_[static_cast<uint8_t>(chars_[i])];
    if (slot >= 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("duplicate alphabet character '") + chars_[i] +
                      "'");
    }
    slot = static_cast<int16_t>(i);
  }
}

bool Alphabet::Covers(std::string_view word) const {
  if (word.empty()) return false;
  for (char c : word) {
    if (!Contains(c)) return false;
  }
  return true;
}

std::string AsciiLower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace typogen

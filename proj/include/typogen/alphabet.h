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

#ifndef TYPOGEN_ALPHABET_H_
#define TYPOGEN_ALPHABET_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace typogen {

// Ordered set of single-byte characters the noise model operates on. Bytes
// outside the alphabet (digits, punctuation, UTF-8 continuation bytes) are
// never corrupted.
class Alphabet {
 public:
  // "abcdefghijklmnopqrstuvwxyz"
  static Alphabet Lowercase();

  Alphabet() { index_.fill(-1); }
  // Throws kInvalidArgument on duplicate characters.
  explicit Alphabet(std::string_view chars);

  int size() const { return static_cast<int>(chars_.size()); }
  bool empty() const { return chars_.empty(); }
  const std::string& chars() const { return chars_; }
  char at(int index) const { return chars_[index]; }

  bool Contains(char c) const { return index_[static_cast<uint8_t>(c)] >= 0; }
  // -1 when absent.
  int IndexOf(char c) const { return index_[static_cast<uint8_t>(c)]; }
  // True when every byte of `word` is in the alphabet (and word is non-empty).
  bool Covers(std::string_view word) const;

  bool operator==(const Alphabet& other) const {
    return chars_ == other.chars_;
  }

 private:
  std::string chars_;
  std::array<int16_t, 256> index_;
};

// ASCII lowercasing; other bytes are left untouched.
std::string AsciiLower(std::string_view text);

}  // namespace typogen

#endif  // TYPOGEN_ALPHABET_H_

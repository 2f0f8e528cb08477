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

#ifndef TYPOGEN_KEYBOARD_MODEL_H_
#define TYPOGEN_KEYBOARD_MODEL_H_

#include <array>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "typogen/random.h"

namespace typogen {

struct KeyPosition {
  int row = 0;
  double column = 0.0;  // Key index within the row, before stagger.

  bool operator==(const KeyPosition&) const = default;
};

enum class AttachSide { kLeft, kRight };

// Virtual keyboard geometry. Coordinates are in key widths; the horizontal
// position of a key is its column plus the stagger of its row.
//
// Layout text format, one entry per line ('#' starts a comment):
//   row_offset <row> <offset>
//   <char> <row> <column>
class KeyboardLayout {
 public:
  // US QWERTY letters, rows staggered by 0.5 (top to home) and 0.75 (home to
  // bottom). Identical to data/keyboard/qwerty.txt.
  static KeyboardLayout Qwerty();

  // Throws kInvalidLayout on malformed lines, duplicate characters or two
  // characters sharing a position.
  static KeyboardLayout Parse(std::istream& in);
  static KeyboardLayout Load(const std::filesystem::path& path);

  bool Contains(char c) const { return keys_[Slot(c)].has_value(); }
  // Throws kCharacterNotInLayout.
  KeyPosition Position(char c) const;
  double RowOffset(int row) const;
  // All characters with a key, in byte order.
  std::string Characters() const;

  // Euclidean distance between the two keys. Throws kCharacterNotInLayout.
  double KeyDistance(char a, char b) const;

  // Decides which neighbor an inserted character is attributed to: the one
  // whose key is strictly nearer, a fair coin from `rng` on a tie, or the
  // only neighbor present. Throws kNoNeighbor when both are absent.
  AttachSide AttributeInsertion(std::optional<char> left, char inserted,
                                std::optional<char> right, Rng& rng) const;

  bool operator==(const KeyboardLayout&) const = default;

 private:
  static std::size_t Slot(char c) { return static_cast<unsigned char>(c); }
  void Add(char c, KeyPosition position);
  double X(const KeyPosition& p) const { return p.column + RowOffset(p.row); }

  std::array<std::optional<KeyPosition>, 256> keys_;
  std::map<int, double> row_offsets_;
};

}  // namespace typogen

#endif  // TYPOGEN_KEYBOARD_MODEL_H_

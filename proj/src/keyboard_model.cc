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

#include "typogen/keyboard_model.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "typogen/error.h"

namespace typogen {
namespace {

constexpr char kQwertyTable[] = R"(row_offset 0 0
row_offset 1 0.5
row_offset 2 1.25
q 0 0
w 0 1
e 0 2
r 0 3
t 0 4
y 0 5
u 0 6
i 0 7
o 0 8
p 0 9
a 1 0
s 1 1
d 1 2
f 1 3
g 1 4
h 1 5
j 1 6
k 1 7
l 1 8
z 2 0
x 2 1
c 2 2
v 2 3
b 2 4
n 2 5
m 2 6
)";

std::string Printable(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (u >= 0x21 && u < 0x7f) return std::string(1, c);
  return fmt::format("\\x{:02x}", u);
}

}  // namespace

KeyboardLayout KeyboardLayout::Qwerty() {
  std::istringstream in(kQwertyTable);
  return Parse(in);
}

KeyboardLayout KeyboardLayout::Parse(std::istream& in) {
  KeyboardLayout layout;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head)) continue;
    auto fail = [&](const std::string& why) {
      return Error(ErrorCode::kInvalidLayout,
                   fmt::format("line {}: {}", line_number, why));
    };
    if (head == "row_offset") {
      int row;
      double offset;
      if (!(fields >> row >> offset)) throw fail("expected `row_offset <row> <offset>`");
      layout.row_offsets_[row] = offset;
    } else if (head.size() == 1) {
      KeyPosition position;
      if (!(fields >> position.row >> position.column)) {
        throw fail("expected `<char> <row> <column>`");
      }
      if (layout.Contains(head[0])) {
        throw fail("duplicate character '" + Printable(head[0]) + "'");
      }
      layout.Add(head[0], position);
    } else {
      throw fail("unrecognized entry '" + head + "'");
    }
    std::string extra;
    if (fields >> extra) throw fail("trailing field '" + extra + "'");
  }
  // Distinct characters must occupy distinct points.
  const std::string chars = layout.Characters();
  for (std::size_t i = 0; i < chars.size(); ++i) {
    for (std::size_t j = i + 1; j < chars.size(); ++j) {
      if (layout.KeyDistance(chars[i], chars[j]) == 0.0) {
        throw Error(ErrorCode::kInvalidLayout,
                    fmt::format("characters '{}' and '{}' share a position",
                                Printable(chars[i]), Printable(chars[j])));
      }
    }
  }
  return layout;
}

KeyboardLayout KeyboardLayout::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open layout " + path.string());
  }
  return Parse(in);
}

void KeyboardLayout::Add(char c, KeyPosition position) {
  keys_[Slot(c)] = position;
}

KeyPosition KeyboardLayout::Position(char c) const {
  const auto& key = keys_[Slot(c)];
  if (!key) {
    throw Error(ErrorCode::kCharacterNotInLayout,
                "'" + Printable(c) + "' has no key in the layout");
  }
  return *key;
}

double KeyboardLayout::RowOffset(int row) const {
  auto it = row_offsets_.find(row);
  return it == row_offsets_.end() ? 0.0 : it->second;
}

std::string KeyboardLayout::Characters() const {
  std::string out;
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    if (keys_[i]) out.push_back(static_cast<char>(i));
  }
  return out;
}

double KeyboardLayout::KeyDistance(char a, char b) const {
  const KeyPosition pa = Position(a);
  const KeyPosition pb = Position(b);
  return std::hypot(X(pa) - X(pb), static_cast<double>(pa.row - pb.row));
}

AttachSide KeyboardLayout::AttributeInsertion(std::optional<char> left,
                                              char inserted,
                                              std::optional<char> right,
                                              Rng& rng) const {
  if (!left && !right) {
    throw Error(ErrorCode::kNoNeighbor,
                "inserted '" + Printable(inserted) + "' has no neighbor");
  }
  if (!left) return AttachSide::kRight;
  if (!right) return AttachSide::kLeft;
  const double to_left = KeyDistance(inserted, *left);
  const double to_right = KeyDistance(inserted, *right);
  if (to_left < to_right) return AttachSide::kLeft;
  if (to_right < to_left) return AttachSide::kRight;
  return rng.Bernoulli(0.5) ? AttachSide::kLeft : AttachSide::kRight;
}

}  // namespace typogen

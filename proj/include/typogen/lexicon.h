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

#ifndef TYPOGEN_LEXICON_H_
#define TYPOGEN_LEXICON_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "typogen/alphabet.h"

namespace typogen {

// Vocabulary with corpus frequencies. Words are stored sorted; a word's id is
// its rank in that order.
class Lexicon {
 public:
  Lexicon() = default;
  // Words must already be normalized; duplicates are summed. Throws
  // kInvalidArgument for words the alphabet does not cover.
  explicit Lexicon(std::vector<std::pair<std::string, uint64_t>> entries,
                   Alphabet alphabet = Alphabet::Lowercase());

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

  bool Contains(std::string_view word) const { return Find(word).has_value(); }
  std::optional<uint32_t> Find(std::string_view word) const;
  // 0 for unknown words.
  uint64_t Frequency(std::string_view word) const;

  const std::string& word(uint32_t id) const { return words_[id]; }
  uint64_t frequency(uint32_t id) const { return freq_[id]; }
  const std::vector<std::string>& words() const { return words_; }

 private:
  Alphabet alphabet_ = Alphabet::Lowercase();
  std::vector<std::string> words_;
  std::vector<uint64_t> freq_;
};

struct LexiconBuild {
  Lexicon lexicon;
  std::size_t skipped = 0;
  std::vector<std::string> diagnostics;
  std::vector<std::string> warnings;
};

// Reads `word<TAB>count` lines. Words are ASCII-lowercased and must then be
// covered by `alphabet`; other lines are skipped and reported.
LexiconBuild BuildLexicon(std::istream& in,
                          const Alphabet& alphabet = Alphabet::Lowercase());

}  // namespace typogen

#endif  // TYPOGEN_LEXICON_H_

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

#ifndef TYPOGEN_SPELL_SUGGESTER_H_
#define TYPOGEN_SPELL_SUGGESTER_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "typogen/lexicon.h"

namespace typogen {

struct Suggestion {
  // A vocabulary word, or "left right" for a word-split suggestion.
  std::string word;
  int distance = 0;
  uint64_t frequency = 0;

  bool operator==(const Suggestion&) const = default;
};

// Total order: distance ascending, frequency descending, then bytewise.
bool SuggestionBefore(const Suggestion& a, const Suggestion& b);

struct SuggesterOptions {
  // Largest edit distance the index supports.
  int max_distance = 2;
  // Also propose splitting the token into two vocabulary words at distance 1,
  // with the smaller of the two frequencies.
  bool word_splits = false;
};

// Dictionary corrector over a delete-neighborhood index: every vocabulary
// word is indexed under all strings obtained by deleting up to max_distance
// characters, so any word within that optimal string alignment distance of a
// query shares at least one deletion variant with it. Candidates are then
// verified with the exact distance. Immutable after construction.
class SpellSuggester {
 public:
  // Keeps a reference to `lexicon`, which must outlive the suggester.
  explicit SpellSuggester(const Lexicon& lexicon, SuggesterOptions options = {});

  const Lexicon& lexicon() const { return lexicon_; }
  const SuggesterOptions& options() const { return options_; }

  // All words within `max_distance` (capped at the index radius), ranked.
  // An in-vocabulary token comes first at distance 0.
  std::vector<Suggestion> Suggest(std::string_view token, int max_distance) const;
  std::vector<Suggestion> Suggest(std::string_view token) const {
    return Suggest(token, options_.max_distance);
  }

 private:
  const Lexicon& lexicon_;
  SuggesterOptions options_;
  // (40-bit variant hash << 24) | word id, sorted.
  std::vector<uint64_t> index_;
};

// Longest whitespace-separated part; ties go to the later part. Throws
// kEmptySuggestion when there is no part.
std::string ResolveSplit(std::string_view suggestion);

// Manufactures a real-word error from a corrupted token:
//   misspelled already in the vocabulary -> unchanged
//   no suggestion                         -> unchanged
//   exactly one suggestion                -> that suggestion, even if original
//   several                               -> best suggestion != original
std::string EnforceConfusion(std::string_view misspelled, std::string_view original,
                             const SpellSuggester& suggester);

// Plain correction: the top suggestion, or the token itself when it is in the
// vocabulary or nothing is suggested.
std::string BestSuggestion(std::string_view misspelled,
                           const SpellSuggester& suggester);

}  // namespace typogen

#endif  // TYPOGEN_SPELL_SUGGESTER_H_

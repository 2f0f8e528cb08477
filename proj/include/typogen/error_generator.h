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

#ifndef TYPOGEN_ERROR_GENERATOR_H_
#define TYPOGEN_ERROR_GENERATOR_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "typogen/category.h"
#include "typogen/lexicon.h"
#include "typogen/noise_model.h"
#include "typogen/random.h"

namespace typogen {

inline constexpr std::string_view kDefaultPlaceholder = "<UNK>";

struct GenerationConfig {
  Coefficients coefficients = Coefficients::Uniform(1.0);
  uint64_t seed = 0;
  std::string placeholder = std::string(kDefaultPlaceholder);

  // Throws kInvalidArgument for negative or non-finite weights and for an
  // empty placeholder or one containing whitespace.
  void Validate() const;
};

// One applied edit. `char_index` indexes the clean token.
//
//   category        original      produced
//   substitution    replaced      replacement
//   insertion       anchor        inserted    (side relative to the anchor)
//   replication     repeated      repeated
//   deletion        deleted       0
//   transposition   token[i]      token[i+1]
struct EditRecord {
  std::size_t doc = 0;
  std::size_t token = 0;
  std::size_t char_index = 0;
  ErrorCategory category = ErrorCategory::kSubstitution;
  char original = 0;
  char produced = 0;
  InsertionSide side = InsertionSide::kBefore;

  // Compact, whitespace-free rendering, e.g. "a>s", "before:a:x", "aa",
  // "a", "ab>ba".
  std::string Detail() const;
  // `doc<TAB>token<TAB>char<TAB>category<TAB>detail`.
  std::string ToTsv() const;
  // Throws kFormat.
  static EditRecord FromTsv(std::string_view line);

  bool operator==(const EditRecord&) const = default;
};

using Tokens = std::vector<std::string>;

// Splits on ASCII whitespace; no empty tokens.
Tokens Tokenize(std::string_view text);
// Joins with single spaces, writing `placeholder` for empty tokens.
std::string JoinTokens(const Tokens& tokens, std::string_view placeholder = "");

// The first token whose alphabetic core (the token with leading and trailing
// non-alphabet bytes removed) is not a vocabulary word, if any. Tokens with
// no alphabet byte at all are ignored.
std::optional<std::string> FindOutOfVocabulary(const Tokens& tokens,
                                               const Lexicon& lexicon);

struct Rejection {
  std::size_t doc = 0;
  std::string token;
};

struct CleanResult {
  std::vector<Tokens> kept;
  std::vector<std::size_t> kept_indices;
  std::vector<Rejection> rejections;
};

// Lowercases every document and keeps it iff FindOutOfVocabulary finds
// nothing.
CleanResult CleanCorpus(const std::vector<Tokens>& documents, const Lexicon& lexicon);

struct Corruption {
  Tokens tokens;  // Same count as the input; a token may become empty.
  std::vector<EditRecord> edits;
};

// Types each token character by character. At every alphabet character the
// five categories are shuffled and tried in that order, each firing with its
// scaled probability; the first to fire is applied and the rest are skipped.
// A transposition swaps the character with the next one inside the same
// token, and the swapped pair receives no further edits. Everything else is
// copied verbatim.
class ErrorGenerator {
 public:
  // Keeps a reference to `model`, which must outlive the generator.
  ErrorGenerator(const NoiseModel& model, GenerationConfig config);

  const GenerationConfig& config() const { return config_; }

  // Uses the stream Rng::ForStream(config.seed, doc_index).
  Corruption Corrupt(const Tokens& tokens, std::size_t doc_index) const;
  Corruption Corrupt(const Tokens& tokens, std::size_t doc_index, Rng& rng) const;

 private:
  char Sample(const std::vector<double>& cdf, int row, Rng& rng) const;

  const NoiseModel& model_;
  GenerationConfig config_;
};

// Re-applies the edit log to the clean tokens. Throws kAlignmentViolation if
// an edit does not match the text.
Tokens ReplayEdits(const Tokens& tokens, const std::vector<EditRecord>& edits);

}  // namespace typogen

#endif  // TYPOGEN_ERROR_GENERATOR_H_

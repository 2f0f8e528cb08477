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

#ifndef TYPOGEN_TYPO_ALIGNMENT_H_
#define TYPOGEN_TYPO_ALIGNMENT_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "typogen/alphabet.h"
#include "typogen/category.h"
#include "typogen/keyboard_model.h"

namespace typogen {

struct TypoPair {
  std::string typo;
  std::string correct;

  bool operator==(const TypoPair&) const = default;
};

struct SeedCorpus {
  std::vector<TypoPair> pairs;
  std::size_t skipped = 0;
  std::vector<std::string> diagnostics;
  std::vector<std::string> warnings;
};

// Reads `typo<TAB>correct` lines. Both sides are ASCII-lowercased; lines
// that are malformed or contain characters outside `alphabet` are skipped
// and reported.
SeedCorpus ParseSeedCorpus(std::istream& in,
                           const Alphabet& alphabet = Alphabet::Lowercase());

// One classified edit turning the correct word into the typo. `position`
// indexes the correct word; for insertions and replications it is the
// insertion point (the edit goes right before correct[position]).
//
//   kind            first        second
//   substitution    original     replacement
//   insertion       anchor       inserted      (side relative to anchor)
//   replication     repeated     repeated
//   deletion        deleted      -
//   transposition   correct[p]   correct[p+1]
struct ClassifiedEdit {
  ErrorCategory kind = ErrorCategory::kSubstitution;
  std::size_t position = 0;
  char first = 0;
  char second = 0;
  InsertionSide side = InsertionSide::kBefore;

  static ClassifiedEdit Substitution(std::size_t position, char original,
                                     char replacement);
  static ClassifiedEdit Insertion(std::size_t position, char inserted,
                                  char anchor, InsertionSide side);
  static ClassifiedEdit Replication(std::size_t position, char c);
  static ClassifiedEdit Deletion(std::size_t position, char c);
  static ClassifiedEdit Transposition(std::size_t position, char first,
                                      char second);

  // The character written into the typo by insertions and replications.
  char inserted() const { return second; }

  bool operator==(const ClassifiedEdit&) const = default;
};

using EditScript = std::vector<ClassifiedEdit>;

std::string DescribeEdit(const ClassifiedEdit& edit);

// Optimal string alignment distance (Damerau-Levenshtein restricted to
// non-overlapping adjacent transpositions), all operations at unit cost.
int OsaDistance(std::string_view a, std::string_view b);

struct Alignment {
  EditScript script;
  int cost = 0;
};

// Minimal-cost alignment of correct -> typo with classified edits. Equal-cost
// backtrace choices prefer match, then transposition, substitution,
// deletion, insertion. Insertions next to an identical typo character become
// replications; the rest are attributed to a side by the keyboard layout, with
// ties drawn from a stream derived from `tie_seed` and the pair itself.
Alignment AlignPair(const TypoPair& pair, const KeyboardLayout& layout,
                    uint64_t tie_seed = 0);

// Replays a script on the correct word.
std::string ApplyEditScript(std::string_view correct, const EditScript& script);

// Raw tallies behind every probability table. All tables are dense over the
// alphabet; pair tables are indexed [conditioning * size + other].
class ErrorCounts {
 public:
  ErrorCounts() : ErrorCounts(Alphabet::Lowercase()) {}
  explicit ErrorCounts(Alphabet alphabet);

  const Alphabet& alphabet() const { return alphabet_; }

  // Tallies f(c) and f(c1c2) over one correct word.
  void AddCorrectWord(std::string_view word);
  // Increments exactly one error-family counter. Edits touching characters
  // outside the alphabet are ignored.
  void AddEdit(const ClassifiedEdit& edit);
  // Associative, commutative merge. Alphabets must match.
  void Merge(const ErrorCounts& other);

  uint64_t CharFreq(char c) const { return Get(char_freq_, c); }
  uint64_t BigramFreq(char c1, char c2) const { return Get(bigram_freq_, c1, c2); }
  uint64_t SubstitutionTotal(char c) const { return Get(sub_total_, c); }
  // Times `replacement` replaced `c`.
  uint64_t SubstitutionPair(char replacement, char c) const {
    return Get(sub_pair_, c, replacement);
  }
  uint64_t InsertionTotal(char c) const { return Get(ins_total_, c); }
  uint64_t InsertionPair(char inserted, char anchor, InsertionSide side) const {
    return Get(side == InsertionSide::kBefore ? ins_before_ : ins_after_,
               anchor, inserted);
  }
  // Total insertions on one side of `c`.
  uint64_t InsertionSideTotal(char c, InsertionSide side) const;
  uint64_t Replication(char c) const { return Get(repl_, c); }
  uint64_t Deletion(char c) const { return Get(del_, c); }
  uint64_t Transposition(char c1, char c2) const { return Get(trans_, c1, c2); }

  uint64_t TotalChars() const;
  uint64_t TotalBigrams() const;
  uint64_t CategoryTotal(ErrorCategory category) const;
  uint64_t TotalEdits() const;

  // Dense views by alphabet index, used by the model and serialization.
  const std::vector<uint64_t>& char_freq() const { return char_freq_; }
  const std::vector<uint64_t>& bigram_freq() const { return bigram_freq_; }
  const std::vector<uint64_t>& substitution_pairs() const { return sub_pair_; }
  const std::vector<uint64_t>& insertion_before_pairs() const { return ins_before_; }
  const std::vector<uint64_t>& insertion_after_pairs() const { return ins_after_; }
  const std::vector<uint64_t>& replications() const { return repl_; }
  const std::vector<uint64_t>& deletions() const { return del_; }
  const std::vector<uint64_t>& transpositions() const { return trans_; }

  // Mutable access for deserialization; totals are re-derived by Finish().
  std::vector<uint64_t>& mutable_char_freq() { return char_freq_; }
  std::vector<uint64_t>& mutable_bigram_freq() { return bigram_freq_; }
  std::vector<uint64_t>& mutable_substitution_pairs() { return sub_pair_; }
  std::vector<uint64_t>& mutable_insertion_before_pairs() { return ins_before_; }
  std::vector<uint64_t>& mutable_insertion_after_pairs() { return ins_after_; }
  std::vector<uint64_t>& mutable_replications() { return repl_; }
  std::vector<uint64_t>& mutable_deletions() { return del_; }
  std::vector<uint64_t>& mutable_transpositions() { return trans_; }
  void Finish();

  bool operator==(const ErrorCounts&) const = default;

 private:
  uint64_t Get(const std::vector<uint64_t>& table, char c) const;
  uint64_t Get(const std::vector<uint64_t>& table, char c1, char c2) const;

  Alphabet alphabet_;
  std::vector<uint64_t> char_freq_;
  std::vector<uint64_t> bigram_freq_;
  std::vector<uint64_t> sub_total_;
  std::vector<uint64_t> sub_pair_;
  std::vector<uint64_t> ins_total_;
  std::vector<uint64_t> ins_before_;
  std::vector<uint64_t> ins_after_;
  std::vector<uint64_t> repl_;
  std::vector<uint64_t> del_;
  std::vector<uint64_t> trans_;
};

struct AccumulateOptions {
  // Pairs whose alignment costs more are discarded as annotation noise.
  int max_cost = 4;
  uint64_t tie_seed = 0;
};

struct AccumulateResult {
  ErrorCounts counts;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::vector<std::string> diagnostics;
};

AccumulateResult AccumulateCounts(std::span<const TypoPair> pairs,
                                  const KeyboardLayout& layout,
                                  const AccumulateOptions& options = {});

// `category,args...,count` rows for every nonzero counter, in a fixed order.
void WriteCountsCsv(const ErrorCounts& counts, std::ostream& out);

}  // namespace typogen

#endif  // TYPOGEN_TYPO_ALIGNMENT_H_

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

#ifndef TYPOGEN_EVAL_STATS_H_
#define TYPOGEN_EVAL_STATS_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "typogen/alphabet.h"
#include "typogen/category.h"
#include "typogen/error_generator.h"
#include "typogen/typo_alignment.h"

namespace typogen {

using CategoryProportions = std::array<double, kNumCategories>;

struct CategoryTally {
  std::array<uint64_t, kNumCategories> counts = {};

  void Add(ErrorCategory category, uint64_t n = 1) { counts[CategoryIndex(category)] += n; }
  void Merge(const CategoryTally& other);
  uint64_t total() const;

  static CategoryTally FromScripts(std::span<const EditScript> scripts);
  static CategoryTally FromEdits(std::span<const EditRecord> edits);
  static CategoryTally FromCounts(const ErrorCounts& counts);

  bool operator==(const CategoryTally&) const = default;
};

// Throws kNoEdits for an empty tally.
CategoryProportions CategoryDistribution(const CategoryTally& tally);

// Token positions and how many of them differ; merges exactly.
struct WordTally {
  uint64_t tokens = 0;
  uint64_t corrupted = 0;

  // Throws kAlignmentViolation when the token counts differ.
  void AddDocument(const Tokens& original, const Tokens& corrupted_tokens);
  void Merge(const WordTally& other);
  // 0 for an empty tally.
  double rate() const;

  bool operator==(const WordTally&) const = default;
};

double CorruptedWordRate(const std::vector<Tokens>& original,
                         const std::vector<Tokens>& corrupted);

// Sufficient statistics for corpus BLEU with up to four n-gram orders.
struct BleuStats {
  static constexpr int kMaxOrder = 4;
  std::array<uint64_t, kMaxOrder> matches = {};
  std::array<uint64_t, kMaxOrder> totals = {};
  uint64_t reference_length = 0;
  uint64_t candidate_length = 0;

  // Clipped n-gram matches of one candidate against its single reference.
  void AddSentence(const Tokens& reference, const Tokens& candidate);
  void Merge(const BleuStats& other);
  // Geometric mean of the modified precisions of orders 1..max_n times the
  // brevity penalty; 0 when any precision is 0 (no smoothing).
  double Score(int max_n = kMaxOrder) const;
};

// Throws kEmptyCorpus for no documents and kAlignmentViolation when the
// document counts differ.
double CorpusBleu(const std::vector<Tokens>& references,
                  const std::vector<Tokens>& candidates, int max_n = 4);

// Integer tallies behind the figure tables; normalized only when exported.
struct StatsReport {
  Alphabet alphabet;
  CategoryTally categories;
  std::vector<uint64_t> inserted;     // by inserted character
  std::vector<uint64_t> deleted;      // by deleted character
  std::vector<uint64_t> substituted;  // by replaced character
  std::vector<uint64_t> substitution_matrix;  // [from * size + to]
  WordTally words;

  explicit StatsReport(Alphabet a = Alphabet::Lowercase());
  static StatsReport FromCounts(const ErrorCounts& counts);
  // Edits on characters outside the alphabet only count toward categories.
  void AddEdit(const EditRecord& edit);
  void Merge(const StatsReport& other);

  bool operator==(const StatsReport&) const = default;
};

void WriteCategoryCsv(const StatsReport& report, std::ostream& out);
void WriteInsertionCsv(const StatsReport& report, std::ostream& out);
void WriteDeletionCsv(const StatsReport& report, std::ostream& out);
void WriteSubstitutionCsv(const StatsReport& report, std::ostream& out);
// |C| x |C| grid of P(to | from); rows without substitutions are all 0.
void WriteSubstitutionMatrixCsv(const StatsReport& report, std::ostream& out);

// Writes category_distribution.csv, insertion_freq.csv, deletion_freq.csv,
// substitution_freq.csv and substitution_matrix.csv into `dir`.
std::vector<std::filesystem::path> ExportTables(const StatsReport& report,
                                                const std::filesystem::path& dir);

}  // namespace typogen

#endif  // TYPOGEN_EVAL_STATS_H_

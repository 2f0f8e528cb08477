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

#include "typogen/eval_stats.h"

#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include <fmt/format.h>

#include "typogen/error.h"

namespace typogen {
namespace {

uint64_t Sum(const std::vector<uint64_t>& v) {
  return std::accumulate(v.begin(), v.end(), uint64_t{0});
}

void AddInto(std::vector<uint64_t>& into, const std::vector<uint64_t>& from) {
  for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
}

double Ratio(uint64_t num, uint64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

void WritePerChar(const Alphabet& a, const std::vector<uint64_t>& counts,
                  std::ostream& out) {
  out << "char,count,proportion\n";
  const uint64_t total = Sum(counts);
  for (int i = 0; i < a.size(); ++i) {
    out << fmt::format("{},{},{}\n", a.at(i), counts[i], Ratio(counts[i], total));
  }
}

// n-gram multiset of one order, keyed by the tokens joined with a unit
// separator.
std::unordered_map<std::string, uint64_t> NGrams(const Tokens& tokens, int n) {
  std::unordered_map<std::string, uint64_t> grams;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (int k = 1; k < n; ++k) {
      key.push_back('\x1f');
      key += tokens[i + k];
    }
    ++grams[key];
  }
  return grams;
}

}  // namespace

void CategoryTally::Merge(const CategoryTally& other) {
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
}

uint64_t CategoryTally::total() const {
  return std::accumulate(counts.begin(), counts.end(), uint64_t{0});
}

CategoryTally CategoryTally::FromScripts(std::span<const EditScript> scripts) {
  CategoryTally tally;
  for (const EditScript& script : scripts) {
    for (const ClassifiedEdit& edit : script) tally.Add(edit.kind);
  }
  return tally;
}

CategoryTally CategoryTally::FromEdits(std::span<const EditRecord> edits) {
  CategoryTally tally;
  for (const EditRecord& edit : edits) tally.Add(edit.category);
  return tally;
}

CategoryTally CategoryTally::FromCounts(const ErrorCounts& counts) {
  CategoryTally tally;
  for (ErrorCategory c : kAllCategories) tally.Add(c, counts.CategoryTotal(c));
  return tally;
}

CategoryProportions CategoryDistribution(const CategoryTally& tally) {
  const uint64_t total = tally.total();
  if (total == 0) throw Error(ErrorCode::kNoEdits, "no edits to distribute");
  CategoryProportions out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Ratio(tally.counts[i], total);
  return out;
}

void WordTally::AddDocument(const Tokens& original, const Tokens& corrupted_tokens) {
  if (original.size() != corrupted_tokens.size()) {
    throw Error(ErrorCode::kAlignmentViolation,
                fmt::format("{} original tokens but {} corrupted tokens",
                            original.size(), corrupted_tokens.size()));
  }
  tokens += original.size();
  for (std::size_t i = 0; i < original.size(); ++i) {
    if (original[i] != corrupted_tokens[i]) ++corrupted;
  }
}

void WordTally::Merge(const WordTally& other) {
  tokens += other.tokens;
  corrupted += other.corrupted;
}

double WordTally::rate() const { return Ratio(corrupted, tokens); }

double CorruptedWordRate(const std::vector<Tokens>& original,
                         const std::vector<Tokens>& corrupted) {
  if (original.size() != corrupted.size()) {
    throw Error(ErrorCode::kAlignmentViolation,
                fmt::format("{} original documents but {} corrupted documents",
                            original.size(), corrupted.size()));
  }
  WordTally tally;
  for (std::size_t d = 0; d < original.size(); ++d) {
    tally.AddDocument(original[d], corrupted[d]);
  }
  return tally.rate();
}

void BleuStats::AddSentence(const Tokens& reference, const Tokens& candidate) {
  reference_length += reference.size();
  candidate_length += candidate.size();
  for (int n = 1; n <= kMaxOrder; ++n) {
    const auto ref = NGrams(reference, n);
    const auto cand = NGrams(candidate, n);
    for (const auto& [gram, count] : cand) {
      totals[n - 1] += count;
      auto it = ref.find(gram);
      if (it != ref.end()) matches[n - 1] += std::min(count, it->second);
    }
  }
}

void BleuStats::Merge(const BleuStats& other) {
  for (int n = 0; n < kMaxOrder; ++n) {
    matches[n] += other.matches[n];
    totals[n] += other.totals[n];
  }
  reference_length += other.reference_length;
  candidate_length += other.candidate_length;
}

double BleuStats::Score(int max_n) const {
  if (max_n < 1 || max_n > kMaxOrder) {
    throw Error(ErrorCode::kInvalidArgument, fmt::format("max_n {} not in [1, 4]", max_n));
  }
  if (candidate_length == 0) return 0.0;
  double log_sum = 0.0;
  for (int n = 0; n < max_n; ++n) {
    if (matches[n] == 0) return 0.0;
    log_sum += std::log(Ratio(matches[n], totals[n]));
  }
  const double c = static_cast<double>(candidate_length);
  const double r = static_cast<double>(reference_length);
  const double brevity = c < r ? std::exp(1.0 - r / c) : 1.0;
  return brevity * std::exp(log_sum / max_n);
}

double CorpusBleu(const std::vector<Tokens>& references,
                  const std::vector<Tokens>& candidates, int max_n) {
  if (references.empty()) throw Error(ErrorCode::kEmptyCorpus, "no documents to score");
  if (references.size() != candidates.size()) {
    throw Error(ErrorCode::kAlignmentViolation,
                fmt::format("{} references but {} candidates", references.size(),
                            candidates.size()));
  }
  BleuStats stats;
  for (std::size_t d = 0; d < references.size(); ++d) {
    stats.AddSentence(references[d], candidates[d]);
  }
  return stats.Score(max_n);
}

StatsReport::StatsReport(Alphabet a)
    : alphabet(std::move(a)),
      inserted(alphabet.size(), 0),
      deleted(alphabet.size(), 0),
      substituted(alphabet.size(), 0),
      substitution_matrix(static_cast<std::size_t>(alphabet.size()) * alphabet.size(), 0) {}

StatsReport StatsReport::FromCounts(const ErrorCounts& counts) {
  StatsReport report(counts.alphabet());
  const int n = report.alphabet.size();
  report.categories = CategoryTally::FromCounts(counts);
  for (int anchor = 0; anchor < n; ++anchor) {
    for (int c = 0; c < n; ++c) {
      const std::size_t slot = static_cast<std::size_t>(anchor) * n + c;
      report.inserted[c] += counts.insertion_before_pairs()[slot] +
                            counts.insertion_after_pairs()[slot];
    }
  }
  report.deleted = counts.deletions();
  report.substitution_matrix = counts.substitution_pairs();
  for (int c = 0; c < n; ++c) {
    report.substituted[c] = counts.SubstitutionTotal(report.alphabet.at(c));
  }
  return report;
}

void StatsReport::AddEdit(const EditRecord& edit) {
  categories.Add(edit.category);
  const int n = alphabet.size();
  const int from = alphabet.IndexOf(edit.original);
  const int to = alphabet.IndexOf(edit.produced);
  switch (edit.category) {
    case ErrorCategory::kInsertion:
      if (to >= 0) ++inserted[to];
      break;
    case ErrorCategory::kDeletion:
      if (from >= 0) ++deleted[from];
      break;
    case ErrorCategory::kSubstitution:
      if (from >= 0 && to >= 0) {
        ++substituted[from];
        ++substitution_matrix[static_cast<std::size_t>(from) * n + to];
      }
      break;
    default:
      break;
  }
}

void StatsReport::Merge(const StatsReport& other) {
  if (!(alphabet == other.alphabet)) {
    throw Error(ErrorCode::kInvalidArgument, "cannot merge reports over different alphabets");
  }
  categories.Merge(other.categories);
  AddInto(inserted, other.inserted);
  AddInto(deleted, other.deleted);
  AddInto(substituted, other.substituted);
  AddInto(substitution_matrix, other.substitution_matrix);
  words.Merge(other.words);
}

void WriteCategoryCsv(const StatsReport& report, std::ostream& out) {
  out << "category,count,proportion\n";
  const uint64_t total = report.categories.total();
  if (total == 0) return;
  for (ErrorCategory c : kAllCategories) {
    const uint64_t count = report.categories.counts[CategoryIndex(c)];
    out << fmt::format("{},{},{}\n", CategoryName(c), count, Ratio(count, total));
  }
}

void WriteInsertionCsv(const StatsReport& report, std::ostream& out) {
  WritePerChar(report.alphabet, report.inserted, out);
}

void WriteDeletionCsv(const StatsReport& report, std::ostream& out) {
  WritePerChar(report.alphabet, report.deleted, out);
}

void WriteSubstitutionCsv(const StatsReport& report, std::ostream& out) {
  WritePerChar(report.alphabet, report.substituted, out);
}

void WriteSubstitutionMatrixCsv(const StatsReport& report, std::ostream& out) {
  const Alphabet& a = report.alphabet;
  const int n = a.size();
  out << "from";
  for (int j = 0; j < n; ++j) out << ',' << a.at(j);
  out << '\n';
  for (int i = 0; i < n; ++i) {
    const auto row = report.substitution_matrix.begin() + static_cast<std::ptrdiff_t>(i) * n;
    const uint64_t total = std::accumulate(row, row + n, uint64_t{0});
    out << a.at(i);
    for (int j = 0; j < n; ++j) out << ',' << fmt::format("{}", Ratio(row[j], total));
    out << '\n';
  }
}

std::vector<std::filesystem::path> ExportTables(const StatsReport& report,
                                                const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  using Writer = void (*)(const StatsReport&, std::ostream&);
  const std::pair<const char*, Writer> tables[] = {
      {"category_distribution.csv", WriteCategoryCsv},
      {"insertion_freq.csv", WriteInsertionCsv},
      {"deletion_freq.csv", WriteDeletionCsv},
      {"substitution_freq.csv", WriteSubstitutionCsv},
      {"substitution_matrix.csv", WriteSubstitutionMatrixCsv},
  };
  std::vector<std::filesystem::path> written;
  for (const auto& [name, write] : tables) {
    const std::filesystem::path path = dir / name;
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
    write(report, out);
    if (!out) throw Error(ErrorCode::kIo, "failed writing " + path.string());
    written.push_back(path);
  }
  return written;
}

}  // namespace typogen

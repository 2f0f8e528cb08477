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

#include "typogen/typo_alignment.h"

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <variant>

#include <fmt/format.h>

#include "typogen/error.h"
#include "typogen/random.h"

namespace typogen {

SeedCorpus ParseSeedCorpus(std::istream& in, const Alphabet& alphabet) {
  SeedCorpus corpus;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      ++corpus.skipped;
      corpus.diagnostics.push_back(
          fmt::format("line {}: expected `typo<TAB>correct`", line_number));
      continue;
    }
    TypoPair pair{AsciiLower(line.substr(0, tab)), AsciiLower(line.substr(tab + 1))};
    if (!alphabet.Covers(pair.typo) || !alphabet.Covers(pair.correct)) {
      ++corpus.skipped;
      corpus.diagnostics.push_back(fmt::format(
          "line {}: empty word or character outside the alphabet", line_number));
      continue;
    }
    corpus.pairs.push_back(std::move(pair));
  }
  if (corpus.pairs.empty()) {
    corpus.warnings.push_back("seed corpus contains no usable pairs");
  }
  return corpus;
}

ClassifiedEdit ClassifiedEdit::Substitution(std::size_t position, char original,
                                            char replacement) {
  return {ErrorCategory::kSubstitution, position, original, replacement,
          InsertionSide::kBefore};
}

ClassifiedEdit ClassifiedEdit::Insertion(std::size_t position, char inserted,
                                         char anchor, InsertionSide side) {
  return {ErrorCategory::kInsertion, position, anchor, inserted, side};
}

ClassifiedEdit ClassifiedEdit::Replication(std::size_t position, char c) {
  return {ErrorCategory::kReplication, position, c, c, InsertionSide::kAfter};
}

ClassifiedEdit ClassifiedEdit::Deletion(std::size_t position, char c) {
  return {ErrorCategory::kDeletion, position, c, 0, InsertionSide::kBefore};
}

ClassifiedEdit ClassifiedEdit::Transposition(std::size_t position, char first,
                                             char second) {
  return {ErrorCategory::kTransposition, position, first, second,
          InsertionSide::kBefore};
}

std::string DescribeEdit(const ClassifiedEdit& edit) {
  switch (edit.kind) {
    case ErrorCategory::kSubstitution:
      return fmt::format("substitution {}->{} @{}", edit.first, edit.second,
                         edit.position);
    case ErrorCategory::kInsertion:
      return fmt::format("insertion {} {} {} @{}", edit.inserted(),
                         edit.side == InsertionSide::kBefore ? "before" : "after",
                         edit.first, edit.position);
    case ErrorCategory::kReplication:
      return fmt::format("replication {} @{}", edit.first, edit.position);
    case ErrorCategory::kDeletion:
      return fmt::format("deletion {} @{}", edit.first, edit.position);
    case ErrorCategory::kTransposition:
      return fmt::format("transposition {}{} @{}", edit.first, edit.second,
                         edit.position);
  }
  return "unknown";
}

namespace {

// Full OSA cost matrix, row-major (|a|+1) x (|b|+1).
std::vector<int> OsaMatrix(std::string_view a, std::string_view b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  const std::size_t w = m + 1;
  std::vector<int> d((n + 1) * w);
  for (std::size_t i = 0; i <= n; ++i) d[i * w] = static_cast<int>(i);
  for (std::size_t j = 0; j <= m; ++j) d[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      int best = std::min(d[(i - 1) * w + j] + 1, d[i * w + j - 1] + 1);
      best = std::min(best, d[(i - 1) * w + j - 1] + (a[i - 1] != b[j - 1]));
      if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1] &&
          a[i - 1] != a[i - 2]) {
        best = std::min(best, d[(i - 2) * w + j - 2] + 1);
      }
      d[i * w + j] = best;
    }
  }
  return d;
}

}  // namespace

int OsaDistance(std::string_view a, std::string_view b) {
  // Three rolling rows are enough for the distance alone.
  const std::size_t m = b.size();
  std::vector<int> prev2(m + 1), prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      int best = std::min(prev[j] + 1, cur[j - 1] + 1);
      best = std::min(best, prev[j - 1] + (a[i - 1] != b[j - 1]));
      if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1] &&
          a[i - 1] != a[i - 2]) {
        best = std::min(best, prev2[j - 2] + 1);
      }
      cur[j] = best;
    }
    std::swap(prev2, prev);
    std::swap(prev, cur);
  }
  return prev[m];
}

Alignment AlignPair(const TypoPair& pair, const KeyboardLayout& layout,
                    uint64_t tie_seed) {
  const std::string_view correct = pair.correct;
  const std::string_view typo = pair.typo;
  const std::size_t n = correct.size();
  const std::size_t m = typo.size();
  const std::size_t w = m + 1;
  const std::vector<int> d = OsaMatrix(correct, typo);
  auto at = [&](std::size_t i, std::size_t j) { return d[i * w + j]; };

  struct RawInsertion {
    std::size_t point;
    std::size_t typo_index;
  };
  // Edits are collected right to left; insertions keep their typo index so
  // they can be classified once the whole path is known.
  std::vector<std::variant<ClassifiedEdit, RawInsertion>> reversed;
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    const int here = at(i, j);
    if (i > 0 && j > 0 && correct[i - 1] == typo[j - 1] &&
        here == at(i - 1, j - 1)) {
      --i;
      --j;
    } else if (i > 1 && j > 1 && correct[i - 1] == typo[j - 2] &&
               correct[i - 2] == typo[j - 1] && correct[i - 1] != correct[i - 2] &&
               here == at(i - 2, j - 2) + 1) {
      reversed.emplace_back(ClassifiedEdit::Transposition(
          i - 2, correct[i - 2], correct[i - 1]));
      i -= 2;
      j -= 2;
    } else if (i > 0 && j > 0 && here == at(i - 1, j - 1) + 1) {
      reversed.emplace_back(
          ClassifiedEdit::Substitution(i - 1, correct[i - 1], typo[j - 1]));
      --i;
      --j;
    } else if (i > 0 && here == at(i - 1, j) + 1) {
      reversed.emplace_back(ClassifiedEdit::Deletion(i - 1, correct[i - 1]));
      --i;
    } else {
      reversed.emplace_back(RawInsertion{i, j - 1});
      --j;
    }
  }

  Alignment alignment;
  alignment.cost = at(n, m);
  std::optional<Rng> tie_rng;
  for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) {
    if (const auto* edit = std::get_if<ClassifiedEdit>(&*it)) {
      alignment.script.push_back(*edit);
      continue;
    }
    const auto& raw = std::get<RawInsertion>(*it);
    const char inserted = typo[raw.typo_index];
    const bool repeats_neighbor =
        (raw.typo_index > 0 && typo[raw.typo_index - 1] == inserted) ||
        (raw.typo_index + 1 < m && typo[raw.typo_index + 1] == inserted);
    if (repeats_neighbor) {
      alignment.script.push_back(ClassifiedEdit::Replication(raw.point, inserted));
      continue;
    }
    std::optional<char> left;
    std::optional<char> right;
    if (raw.point > 0) left = correct[raw.point - 1];
    if (raw.point < n) right = correct[raw.point];
    if (!tie_rng) {
      tie_rng.emplace(Rng::ForStream(
          tie_seed, HashBytes(std::string(typo) + '\t' + std::string(correct))));
    }
    if (layout.AttributeInsertion(left, inserted, right, *tie_rng) ==
        AttachSide::kLeft) {
      alignment.script.push_back(ClassifiedEdit::Insertion(
          raw.point, inserted, *left, InsertionSide::kAfter));
    } else {
      alignment.script.push_back(ClassifiedEdit::Insertion(
          raw.point, inserted, *right, InsertionSide::kBefore));
    }
  }
  return alignment;
}

std::string ApplyEditScript(std::string_view correct, const EditScript& script) {
  std::string out;
  out.reserve(correct.size() + script.size());
  std::size_t cursor = 0;
  for (const ClassifiedEdit& edit : script) {
    if (edit.position < cursor || edit.position > correct.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edit script out of order: " + DescribeEdit(edit));
    }
    out.append(correct.substr(cursor, edit.position - cursor));
    cursor = edit.position;
    switch (edit.kind) {
      case ErrorCategory::kSubstitution:
        out.push_back(edit.second);
        cursor += 1;
        break;
      case ErrorCategory::kInsertion:
      case ErrorCategory::kReplication:
        out.push_back(edit.inserted());
        break;
      case ErrorCategory::kDeletion:
        cursor += 1;
        break;
      case ErrorCategory::kTransposition:
        out.push_back(edit.second);
        out.push_back(edit.first);
        cursor += 2;
        break;
    }
    if (cursor > correct.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edit runs past the end of the word: " + DescribeEdit(edit));
    }
  }
  out.append(correct.substr(cursor));
  return out;
}

ErrorCounts::ErrorCounts(Alphabet alphabet) : alphabet_(std::move(alphabet)) {
  const std::size_t a = alphabet_.size();
  char_freq_.assign(a, 0);
  bigram_freq_.assign(a * a, 0);
  sub_total_.assign(a, 0);
  sub_pair_.assign(a * a, 0);
  ins_total_.assign(a, 0);
  ins_before_.assign(a * a, 0);
  ins_after_.assign(a * a, 0);
  repl_.assign(a, 0);
  del_.assign(a, 0);
  trans_.assign(a * a, 0);
}

uint64_t ErrorCounts::Get(const std::vector<uint64_t>& table, char c) const {
  const int i = alphabet_.IndexOf(c);
  return i < 0 ? 0 : table[i];
}

uint64_t ErrorCounts::Get(const std::vector<uint64_t>& table, char c1,
                          char c2) const {
  const int i = alphabet_.IndexOf(c1);
  const int j = alphabet_.IndexOf(c2);
  return (i < 0 || j < 0) ? 0 : table[i * alphabet_.size() + j];
}

void ErrorCounts::AddCorrectWord(std::string_view word) {
  const int a = alphabet_.size();
  int prev = -1;
  for (char c : word) {
    const int i = alphabet_.IndexOf(c);
    if (i >= 0) {
      ++char_freq_[i];
      if (prev >= 0) ++bigram_freq_[prev * a + i];
    }
    prev = i;
  }
}

void ErrorCounts::AddEdit(const ClassifiedEdit& edit) {
  const int a = alphabet_.size();
  const int x = alphabet_.IndexOf(edit.first);
  const int y = alphabet_.IndexOf(edit.second);
  if (x < 0) return;
  switch (edit.kind) {
    case ErrorCategory::kSubstitution:
      if (y < 0) return;
      ++sub_pair_[x * a + y];
      ++sub_total_[x];
      break;
    case ErrorCategory::kInsertion:
      if (y < 0) return;
      ++(edit.side == InsertionSide::kBefore ? ins_before_ : ins_after_)[x * a + y];
      ++ins_total_[x];
      break;
    case ErrorCategory::kReplication:
      ++repl_[x];
      break;
    case ErrorCategory::kDeletion:
      ++del_[x];
      break;
    case ErrorCategory::kTransposition:
      if (y < 0) return;
      ++trans_[x * a + y];
      break;
  }
}

void ErrorCounts::Merge(const ErrorCounts& other) {
  if (!(alphabet_ == other.alphabet_)) {
    throw Error(ErrorCode::kInvalidArgument, "cannot merge counts over different alphabets");
  }
  auto add = [](std::vector<uint64_t>& into, const std::vector<uint64_t>& from) {
    for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
  };
  add(char_freq_, other.char_freq_);
  add(bigram_freq_, other.bigram_freq_);
  add(sub_total_, other.sub_total_);
  add(sub_pair_, other.sub_pair_);
  add(ins_total_, other.ins_total_);
  add(ins_before_, other.ins_before_);
  add(ins_after_, other.ins_after_);
  add(repl_, other.repl_);
  add(del_, other.del_);
  add(trans_, other.trans_);
}

void ErrorCounts::Finish() {
  const std::size_t a = alphabet_.size();
  for (std::size_t c = 0; c < a; ++c) {
    uint64_t sub = 0;
    uint64_t ins = 0;
    for (std::size_t o = 0; o < a; ++o) {
      sub += sub_pair_[c * a + o];
      ins += ins_before_[c * a + o] + ins_after_[c * a + o];
    }
    sub_total_[c] = sub;
    ins_total_[c] = ins;
  }
}

uint64_t ErrorCounts::InsertionSideTotal(char c, InsertionSide side) const {
  const int i = alphabet_.IndexOf(c);
  if (i < 0) return 0;
  const auto& table = side == InsertionSide::kBefore ? ins_before_ : ins_after_;
  const std::size_t a = alphabet_.size();
  uint64_t total = 0;
  for (std::size_t o = 0; o < a; ++o) total += table[i * a + o];
  return total;
}

namespace {
uint64_t Sum(const std::vector<uint64_t>& v) {
  uint64_t total = 0;
  for (uint64_t x : v) total += x;
  return total;
}
}  // namespace

uint64_t ErrorCounts::TotalChars() const { return Sum(char_freq_); }
uint64_t ErrorCounts::TotalBigrams() const { return Sum(bigram_freq_); }

uint64_t ErrorCounts::CategoryTotal(ErrorCategory category) const {
  switch (category) {
    case ErrorCategory::kSubstitution: return Sum(sub_total_);
    case ErrorCategory::kInsertion: return Sum(ins_total_);
    case ErrorCategory::kReplication: return Sum(repl_);
    case ErrorCategory::kDeletion: return Sum(del_);
    case ErrorCategory::kTransposition: return Sum(trans_);
  }
  return 0;
}

uint64_t ErrorCounts::TotalEdits() const {
  uint64_t total = 0;
  for (ErrorCategory category : kAllCategories) total += CategoryTotal(category);
  return total;
}

AccumulateResult AccumulateCounts(std::span<const TypoPair> pairs,
                                  const KeyboardLayout& layout,
                                  const AccumulateOptions& options) {
  AccumulateResult result;
  for (const TypoPair& pair : pairs) {
    Alignment alignment = AlignPair(pair, layout, options.tie_seed);
    if (alignment.cost > options.max_cost) {
      ++result.rejected;
      result.diagnostics.push_back(
          fmt::format("discarded {}\t{}: alignment cost {} exceeds {}", pair.typo,
                      pair.correct, alignment.cost, options.max_cost));
      continue;
    }
    ++result.accepted;
    result.counts.AddCorrectWord(pair.correct);
    for (const ClassifiedEdit& edit : alignment.script) result.counts.AddEdit(edit);
  }
  return result;
}

void WriteCountsCsv(const ErrorCounts& counts, std::ostream& out) {
  const Alphabet& alphabet = counts.alphabet();
  const int a = alphabet.size();
  out << "category,arg1,arg2,arg3,count\n";
  auto row = [&](std::string_view category, std::string_view x, std::string_view y,
                 std::string_view z, uint64_t count) {
    if (count == 0) return;
    out << category << ',' << x << ',' << y << ',' << z << ',' << count << '\n';
  };
  auto s = [](char c) { return std::string(1, c); };
  for (int i = 0; i < a; ++i) row("char", s(alphabet.at(i)), "", "", counts.char_freq()[i]);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < a; ++j) {
      row("bigram", s(alphabet.at(i)), s(alphabet.at(j)), "",
          counts.bigram_freq()[i * a + j]);
    }
  }
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < a; ++j) {
      row("substitution", s(alphabet.at(i)), s(alphabet.at(j)), "",
          counts.substitution_pairs()[i * a + j]);
    }
  }
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < a; ++j) {
      row("insertion", s(alphabet.at(i)), "before", s(alphabet.at(j)),
          counts.insertion_before_pairs()[i * a + j]);
      row("insertion", s(alphabet.at(i)), "after", s(alphabet.at(j)),
          counts.insertion_after_pairs()[i * a + j]);
    }
  }
  for (int i = 0; i < a; ++i) row("replication", s(alphabet.at(i)), "", "", counts.replications()[i]);
  for (int i = 0; i < a; ++i) row("deletion", s(alphabet.at(i)), "", "", counts.deletions()[i]);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < a; ++j) {
      row("transposition", s(alphabet.at(i)), s(alphabet.at(j)), "",
          counts.transpositions()[i * a + j]);
    }
  }
}

}  // namespace typogen

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

#include "typogen/error_generator.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

#include <fmt/format.h>

#include "typogen/error.h"

namespace typogen {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

Error TsvError(std::string_view line, const std::string& why) {
  return Error(ErrorCode::kFormat,
               fmt::format("edit log line '{}': {}", line, why));
}

std::size_t ParseIndex(std::string_view field, std::string_view line) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || end != field.data() + field.size() || field.empty()) {
    throw TsvError(line, "bad index '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

void GenerationConfig::Validate() const {
  for (ErrorCategory c : kAllCategories) {
    const double w = coefficients[c];
    if (!std::isfinite(w) || w < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  fmt::format("{} coefficient {} must be finite and >= 0",
                              CategoryName(c), w));
    }
  }
  if (placeholder.empty() ||
      std::any_of(placeholder.begin(), placeholder.end(), IsSpace)) {
    throw Error(ErrorCode::kInvalidArgument,
                "placeholder must be non-empty and free of whitespace");
  }
}

std::string EditRecord::Detail() const {
  switch (category) {
    case ErrorCategory::kSubstitution:
      return fmt::format("{}>{}", original, produced);
    case ErrorCategory::kInsertion:
      return fmt::format("{}:{}:{}", side == InsertionSide::kBefore ? "before" : "after",
                         original, produced);
    case ErrorCategory::kReplication:
      return fmt::format("{}{}", original, original);
    case ErrorCategory::kDeletion:
      return std::string(1, original);
    case ErrorCategory::kTransposition:
      return fmt::format("{}{}>{}{}", original, produced, produced, original);
  }
  return {};
}

std::string EditRecord::ToTsv() const {
  return fmt::format("{}\t{}\t{}\t{}\t{}", doc, token, char_index,
                     CategoryName(category), Detail());
}

EditRecord EditRecord::FromTsv(std::string_view line) {
  std::array<std::string_view, 5> fields;
  std::size_t start = 0;
  for (std::size_t f = 0; f < fields.size(); ++f) {
    const std::size_t tab = line.find('\t', start);
    if ((tab == std::string_view::npos) != (f + 1 == fields.size())) {
      throw TsvError(line, "expected 5 tab-separated fields");
    }
    fields[f] = line.substr(start, tab == std::string_view::npos ? std::string_view::npos
                                                                : tab - start);
    start = tab + 1;
  }
  EditRecord r;
  r.doc = ParseIndex(fields[0], line);
  r.token = ParseIndex(fields[1], line);
  r.char_index = ParseIndex(fields[2], line);
  const auto category = ParseCategory(fields[3]);
  if (!category) throw TsvError(line, "unknown category");
  r.category = *category;
  const std::string_view d = fields[4];
  auto bad = [&] { return TsvError(line, "malformed detail"); };
  switch (r.category) {
    case ErrorCategory::kSubstitution:
      if (d.size() != 3 || d[1] != '>') throw bad();
      r.original = d[0];
      r.produced = d[2];
      break;
    case ErrorCategory::kInsertion: {
      std::string_view rest;
      if (d.starts_with("before:")) {
        r.side = InsertionSide::kBefore;
        rest = d.substr(7);
      } else if (d.starts_with("after:")) {
        r.side = InsertionSide::kAfter;
        rest = d.substr(6);
      } else {
        throw bad();
      }
      if (rest.size() != 3 || rest[1] != ':') throw bad();
      r.original = rest[0];
      r.produced = rest[2];
      break;
    }
    case ErrorCategory::kReplication:
      if (d.size() != 2 || d[0] != d[1]) throw bad();
      r.original = r.produced = d[0];
      break;
    case ErrorCategory::kDeletion:
      if (d.size() != 1) throw bad();
      r.original = d[0];
      break;
    case ErrorCategory::kTransposition:
      if (d.size() != 5 || d[2] != '>' || d[3] != d[1] || d[4] != d[0]) throw bad();
      r.original = d[0];
      r.produced = d[1];
      break;
  }
  return r;
}

Tokens Tokenize(std::string_view text) {
  Tokens out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !IsSpace(text[i])) ++i;
    if (i > start) out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

std::string JoinTokens(const Tokens& tokens, std::string_view placeholder) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    if (tokens[i].empty()) {
      out.append(placeholder);
    } else {
      out.append(tokens[i]);
    }
  }
  return out;
}

std::optional<std::string> FindOutOfVocabulary(const Tokens& tokens,
                                               const Lexicon& lexicon) {
  const Alphabet& a = lexicon.alphabet();
  for (const std::string& token : tokens) {
    std::size_t begin = 0;
    std::size_t end = token.size();
    while (begin < end && !a.Contains(token[begin])) ++begin;
    while (end > begin && !a.Contains(token[end - 1])) --end;
    if (begin == end) continue;
    if (!lexicon.Contains(std::string_view(token).substr(begin, end - begin))) {
      return token;
    }
  }
  return std::nullopt;
}

CleanResult CleanCorpus(const std::vector<Tokens>& documents, const Lexicon& lexicon) {
  CleanResult result;
  for (std::size_t d = 0; d < documents.size(); ++d) {
    Tokens lowered;
    lowered.reserve(documents[d].size());
    for (const std::string& t : documents[d]) lowered.push_back(AsciiLower(t));
    if (auto oov = FindOutOfVocabulary(lowered, lexicon)) {
      result.rejections.push_back({d, std::move(*oov)});
      continue;
    }
    result.kept.push_back(std::move(lowered));
    result.kept_indices.push_back(d);
  }
  return result;
}

ErrorGenerator::ErrorGenerator(const NoiseModel& model, GenerationConfig config)
    : model_(model), config_(std::move(config)) {
  config_.Validate();
}

Corruption ErrorGenerator::Corrupt(const Tokens& tokens, std::size_t doc_index) const {
  Rng rng = Rng::ForStream(config_.seed, doc_index);
  return Corrupt(tokens, doc_index, rng);
}

char ErrorGenerator::Sample(const std::vector<double>& cdf, int row, Rng& rng) const {
  const int n = model_.tables().size;
  const auto begin = cdf.begin() + static_cast<std::ptrdiff_t>(row) * n;
  const double u = rng.Uniform();
  auto it = std::upper_bound(begin, begin + n, u);
  // Guard against rounding in the last cumulative entry.
  if (it == begin + n) --it;
  while (it != begin && *it == *(it - 1)) --it;
  return model_.alphabet().at(static_cast<int>(it - begin));
}

Corruption ErrorGenerator::Corrupt(const Tokens& tokens, std::size_t doc_index,
                                   Rng& rng) const {
  const ProbabilityTables& t = model_.tables();
  const Alphabet& alphabet = model_.alphabet();
  const int n = t.size;
  const Coefficients& w = config_.coefficients;
  auto scaled = [](double weight, double p) { return std::min(1.0, weight * p); };

  Corruption out;
  out.tokens.reserve(tokens.size());
  for (std::size_t ti = 0; ti < tokens.size(); ++ti) {
    const std::string& token = tokens[ti];
    std::string typed;
    typed.reserve(token.size() + 2);
    std::size_t i = 0;
    while (i < token.size()) {
      const char c = token[i];
      const int ci = alphabet.IndexOf(c);
      if (ci < 0) {
        typed.push_back(c);
        ++i;
        continue;
      }
      const int next = i + 1 < token.size() ? alphabet.IndexOf(token[i + 1]) : -1;
      const double q_sub = scaled(w[ErrorCategory::kSubstitution], t.substitution[ci]);
      const double q_before = scaled(w[ErrorCategory::kInsertion], t.insertion_before[ci]);
      const double q_after = scaled(w[ErrorCategory::kInsertion], t.insertion_after[ci]);
      const double q_rep = scaled(w[ErrorCategory::kReplication], t.replication[ci]);
      const double q_del = scaled(w[ErrorCategory::kDeletion], t.deletion[ci]);
      const double q_trans =
          next < 0 ? 0.0
                   : scaled(w[ErrorCategory::kTransposition], t.transposition[ci * n + next]);
      if (q_sub + q_before + q_after + q_rep + q_del + q_trans == 0.0) {
        typed.push_back(c);
        ++i;
        continue;
      }

      std::array<ErrorCategory, kNumCategories> order = kAllCategories;
      for (std::size_t k = order.size() - 1; k > 0; --k) {
        std::swap(order[k], order[rng.Below(k + 1)]);
      }
      EditRecord edit;
      edit.doc = doc_index;
      edit.token = ti;
      edit.char_index = i;
      edit.original = c;
      bool fired = false;
      std::size_t advance = 1;
      auto fires = [&rng](double q) { return q > 0.0 && rng.Uniform() < q; };
      for (ErrorCategory category : order) {
        switch (category) {
          case ErrorCategory::kSubstitution:
            if (fires(q_sub)) {
              edit.produced = Sample(t.substitution_cdf, ci, rng);
              typed.push_back(edit.produced);
              fired = true;
            }
            break;
          case ErrorCategory::kInsertion:
            if (fires(q_before)) {
              edit.side = InsertionSide::kBefore;
              edit.produced = Sample(t.insertion_before_cdf, ci, rng);
              typed.push_back(edit.produced);
              typed.push_back(c);
              fired = true;
            } else if (fires(q_after)) {
              edit.side = InsertionSide::kAfter;
              edit.produced = Sample(t.insertion_after_cdf, ci, rng);
              typed.push_back(c);
              typed.push_back(edit.produced);
              fired = true;
            }
            break;
          case ErrorCategory::kReplication:
            if (fires(q_rep)) {
              edit.produced = c;
              typed.push_back(c);
              typed.push_back(c);
              fired = true;
            }
            break;
          case ErrorCategory::kDeletion:
            if (fires(q_del)) {
              fired = true;
            }
            break;
          case ErrorCategory::kTransposition:
            if (fires(q_trans)) {
              edit.produced = token[i + 1];
              typed.push_back(token[i + 1]);
              typed.push_back(c);
              advance = 2;
              fired = true;
            }
            break;
        }
        if (fired) {
          edit.category = category;
          out.edits.push_back(edit);
          break;
        }
      }
      if (!fired) typed.push_back(c);
      i += advance;
    }
    out.tokens.push_back(std::move(typed));
  }
  return out;
}

Tokens ReplayEdits(const Tokens& tokens, const std::vector<EditRecord>& edits) {
  Tokens out;
  out.reserve(tokens.size());
  std::size_t e = 0;
  for (std::size_t ti = 0; ti < tokens.size(); ++ti) {
    const std::string& token = tokens[ti];
    std::string typed;
    std::size_t cursor = 0;
    for (; e < edits.size() && edits[e].token == ti; ++e) {
      const EditRecord& edit = edits[e];
      auto violation = [&](std::string_view why) {
        return Error(ErrorCode::kAlignmentViolation,
                     fmt::format("edit {} on token {}: {}", edit.Detail(), ti, why));
      };
      const std::size_t width = edit.category == ErrorCategory::kTransposition ? 2 : 1;
      if (edit.char_index < cursor || edit.char_index + width > token.size()) {
        throw violation("position out of order or out of range");
      }
      if (token[edit.char_index] != edit.original ||
          (width == 2 && token[edit.char_index + 1] != edit.produced)) {
        throw violation("character mismatch");
      }
      typed.append(token, cursor, edit.char_index - cursor);
      switch (edit.category) {
        case ErrorCategory::kSubstitution:
          typed.push_back(edit.produced);
          break;
        case ErrorCategory::kInsertion:
          if (edit.side == InsertionSide::kBefore) {
            typed.push_back(edit.produced);
            typed.push_back(edit.original);
          } else {
            typed.push_back(edit.original);
            typed.push_back(edit.produced);
          }
          break;
        case ErrorCategory::kReplication:
          typed.push_back(edit.original);
          typed.push_back(edit.original);
          break;
        case ErrorCategory::kDeletion:
          break;
        case ErrorCategory::kTransposition:
          typed.push_back(edit.produced);
          typed.push_back(edit.original);
          break;
      }
      cursor = edit.char_index + width;
    }
    typed.append(token, cursor, std::string::npos);
    out.push_back(std::move(typed));
  }
  if (e != edits.size()) {
    throw Error(ErrorCode::kAlignmentViolation,
                "edit log refers to tokens in the wrong order or beyond the text");
  }
  return out;
}

}  // namespace typogen

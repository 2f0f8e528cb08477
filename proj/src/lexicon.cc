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

#include "typogen/lexicon.h"

#include <algorithm>
#include <charconv>
#include <istream>

#include <fmt/format.h>

#include "typogen/error.h"

namespace typogen {

Lexicon::Lexicon(std::vector<std::pair<std::string, uint64_t>> entries,
                 Alphabet alphabet)
    : alphabet_(std::move(alphabet)) {
  std::sort(entries.begin(), entries.end());
  for (auto& [word, count] : entries) {
    if (!alphabet_.Covers(word)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "lexicon word '" + word + "' is not covered by the alphabet");
    }
    if (!words_.empty() && words_.back() == word) {
      freq_.back() += count;
      continue;
    }
    words_.push_back(std::move(word));
    freq_.push_back(count);
  }
  if (words_.size() >= (uint64_t{1} << 32)) {
    throw Error(ErrorCode::kInvalidArgument, "lexicon too large");
  }
}

std::optional<uint32_t> Lexicon::Find(std::string_view word) const {
  auto it = std::lower_bound(words_.begin(), words_.end(), word);
  if (it == words_.end() || *it != word) return std::nullopt;
  return static_cast<uint32_t>(it - words_.begin());
}

uint64_t Lexicon::Frequency(std::string_view word) const {
  auto id = Find(word);
  return id ? freq_[*id] : 0;
}

LexiconBuild BuildLexicon(std::istream& in, const Alphabet& alphabet) {
  LexiconBuild result;
  std::vector<std::pair<std::string, uint64_t>> entries;
  std::string line;
  std::size_t line_number = 0;
  auto skip = [&](const std::string& why) {
    ++result.skipped;
    result.diagnostics.push_back(fmt::format("line {}: {}", line_number, why));
  };
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      skip("expected `word<TAB>count`");
      continue;
    }
    std::string word = AsciiLower(std::string_view(line).substr(0, tab));
    const std::string_view count_text = std::string_view(line).substr(tab + 1);
    uint64_t count = 0;
    const auto [end, ec] =
        std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
    if (ec != std::errc() || end != count_text.data() + count_text.size() ||
        count_text.empty()) {
      skip("count '" + std::string(count_text) + "' is not a non-negative integer");
      continue;
    }
    if (!alphabet.Covers(word)) {
      skip("word '" + word + "' has characters outside the alphabet");
      continue;
    }
    entries.emplace_back(std::move(word), count);
  }
  if (entries.empty()) result.warnings.push_back("lexicon is empty");
  result.lexicon = Lexicon(std::move(entries), alphabet);
  return result;
}

}  // namespace typogen

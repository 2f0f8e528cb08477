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

#include "typogen/spell_suggester.h"

#include <algorithm>
#include <cctype>

#include "typogen/error.h"
#include "typogen/random.h"
#include "typogen/typo_alignment.h"

namespace typogen {
namespace {

constexpr int kIdBits = 24;
constexpr uint64_t kIdMask = (uint64_t{1} << kIdBits) - 1;

uint64_t VariantKey(std::string_view variant) {
  return HashBytes(variant) >> kIdBits << kIdBits;
}

// All distinct strings obtained from `word` by deleting up to `depth`
// characters, including `word` itself.
std::vector<std::string> DeleteVariants(std::string_view word, int depth) {
  std::vector<std::string> out = {std::string(word)};
  std::size_t level_begin = 0;
  for (int d = 0; d < depth; ++d) {
    const std::size_t level_end = out.size();
    for (std::size_t k = level_begin; k < level_end; ++k) {
      const std::string base = out[k];
      for (std::size_t i = 0; i < base.size(); ++i) {
        // Deleting the first of a run of equal characters is enough.
        if (i > 0 && base[i] == base[i - 1]) continue;
        std::string shorter = base;
        shorter.erase(i, 1);
        out.push_back(std::move(shorter));
      }
    }
    level_begin = level_end;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

bool SuggestionBefore(const Suggestion& a, const Suggestion& b) {
  if (a.distance != b.distance) return a.distance < b.distance;
  if (a.frequency != b.frequency) return a.frequency > b.frequency;
  return a.word < b.word;
}

SpellSuggester::SpellSuggester(const Lexicon& lexicon, SuggesterOptions options)
    : lexicon_(lexicon), options_(options) {
  if (options_.max_distance < 0) {
    throw Error(ErrorCode::kInvalidArgument, "max_distance must be >= 0");
  }
  if (lexicon_.size() > kIdMask) {
    throw Error(ErrorCode::kInvalidArgument, "lexicon too large for the index");
  }
  for (uint32_t id = 0; id < lexicon_.size(); ++id) {
    for (const std::string& v : DeleteVariants(lexicon_.word(id), options_.max_distance)) {
      index_.push_back(VariantKey(v) | id);
    }
  }
  std::sort(index_.begin(), index_.end());
}

std::vector<Suggestion> SpellSuggester::Suggest(std::string_view token,
                                                int max_distance) const {
  const int radius = std::clamp(max_distance, 0, options_.max_distance);
  std::vector<uint32_t> candidates;
  for (const std::string& v : DeleteVariants(token, radius)) {
    const uint64_t key = VariantKey(v);
    auto lo = std::lower_bound(index_.begin(), index_.end(), key);
    for (auto it = lo; it != index_.end() && (*it & ~kIdMask) == key; ++it) {
      candidates.push_back(static_cast<uint32_t>(*it & kIdMask));
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<Suggestion> out;
  for (uint32_t id : candidates) {
    const std::string& word = lexicon_.word(id);
    const std::size_t gap = word.size() > token.size() ? word.size() - token.size()
                                                       : token.size() - word.size();
    if (gap > static_cast<std::size_t>(radius)) continue;
    const int d = OsaDistance(token, word);
    if (d <= radius) out.push_back({word, d, lexicon_.frequency(id)});
  }
  if (options_.word_splits && radius >= 1) {
    for (std::size_t k = 1; k < token.size(); ++k) {
      const std::string_view left = token.substr(0, k);
      const std::string_view right = token.substr(k);
      auto l = lexicon_.Find(left);
      auto r = lexicon_.Find(right);
      if (!l || !r) continue;
      out.push_back({std::string(left) + " " + std::string(right), 1,
                     std::min(lexicon_.frequency(*l), lexicon_.frequency(*r))});
    }
  }
  std::sort(out.begin(), out.end(), SuggestionBefore);
  return out;
}

std::string ResolveSplit(std::string_view suggestion) {
  std::string_view best;
  std::size_t i = 0;
  while (i < suggestion.size()) {
    while (i < suggestion.size() && std::isspace(static_cast<unsigned char>(suggestion[i]))) ++i;
    const std::size_t start = i;
    while (i < suggestion.size() && !std::isspace(static_cast<unsigned char>(suggestion[i]))) ++i;
    const std::string_view part = suggestion.substr(start, i - start);
    if (!part.empty() && part.size() >= best.size()) best = part;
  }
  if (best.empty()) {
    throw Error(ErrorCode::kEmptySuggestion, "suggestion has no words");
  }
  return std::string(best);
}

std::string EnforceConfusion(std::string_view misspelled, std::string_view original,
                             const SpellSuggester& suggester) {
  if (misspelled.empty() || suggester.lexicon().Contains(misspelled)) {
    return std::string(misspelled);
  }
  const std::vector<Suggestion> suggestions = suggester.Suggest(misspelled);
  if (suggestions.empty()) return std::string(misspelled);
  if (suggestions.size() == 1) return ResolveSplit(suggestions.front().word);
  for (const Suggestion& s : suggestions) {
    std::string word = ResolveSplit(s.word);
    if (word != original) return word;
  }
  return std::string(misspelled);
}

std::string BestSuggestion(std::string_view misspelled,
                           const SpellSuggester& suggester) {
  if (misspelled.empty() || suggester.lexicon().Contains(misspelled)) {
    return std::string(misspelled);
  }
  const std::vector<Suggestion> suggestions = suggester.Suggest(misspelled);
  if (suggestions.empty()) return std::string(misspelled);
  return ResolveSplit(suggestions.front().word);
}

}  // namespace typogen

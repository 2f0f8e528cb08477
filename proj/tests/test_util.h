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

#ifndef TYPOGEN_TESTS_TEST_UTIL_H_
#define TYPOGEN_TESTS_TEST_UTIL_H_

#include <filesystem>
#include <string>
#include <vector>

#include "typogen/alphabet.h"
#include "typogen/error_generator.h"
#include "typogen/lexicon.h"
#include "typogen/noise_model.h"
#include "typogen/typo_alignment.h"

namespace typogen::testing {

inline std::filesystem::path DataDir() { return TYPOGEN_DATA_DIR; }
inline std::filesystem::path TestDataDir() { return TYPOGEN_TESTDATA_DIR; }

// Fresh directory under the system temp dir, removed on destruction.
class ScratchDir {
 public:
  explicit ScratchDir(const std::string& name);
  ~ScratchDir();
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, const std::string& content);

// Accumulated counts for (typo, correct) pairs with the built-in layout.
ErrorCounts CountsFor(const std::vector<TypoPair>& pairs);

// The bundled seed pairs, their accepted counts and the induced model.
const SeedCorpus& SeedPairs();
const AccumulateResult& SeedCounts();
const NoiseModel& SeedModel();

// One tokenized document per line.
std::vector<Tokens> ReadDocuments(const std::filesystem::path& path);
// The bundled review corpus after cleaning against the bundled lexicon.
const std::vector<Tokens>& CleanReviews();
const Lexicon& BundledLexicon();

Lexicon MakeLexicon(const std::vector<std::pair<std::string, uint64_t>>& entries);

}  // namespace typogen::testing

#endif  // TYPOGEN_TESTS_TEST_UTIL_H_

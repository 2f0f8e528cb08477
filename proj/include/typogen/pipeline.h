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

#ifndef TYPOGEN_PIPELINE_H_
#define TYPOGEN_PIPELINE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "typogen/eval_stats.h"
#include "typogen/noise_model.h"

namespace typogen {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class ConfusionMode { kEnforced, kBestSuggestion, kOff };

std::string_view ConfusionModeName(ConfusionMode mode);
// Throws kInvalidArgument.
ConfusionMode ParseConfusionMode(std::string_view name);

// low = 0.0375, medium = 0.075, high = 0.15. Throws kInvalidArgument.
double LevelRate(std::string_view level);

// Everything a run depends on. Settable from `key = value` config files and
// command-line flags through Set(); keys:
//   seed_corpus layout lexicon corpus model output_dir
//   level rate coefficients (five comma-separated weights)
//   weight.<category> clamping seed confusion placeholder max_distance
//   word_splits max_cost tie_seed
struct PipelineConfig {
  std::filesystem::path seed_corpus;
  std::filesystem::path layout;  // empty: built-in QWERTY
  std::filesystem::path lexicon;
  std::filesystem::path corpus;
  std::filesystem::path model;
  std::filesystem::path output_dir;

  // Exactly one of level, rate and coefficients drives a corrupt run.
  std::optional<std::string> level;
  std::optional<double> rate;
  std::optional<Coefficients> coefficients;
  // Relative category weights applied before calibration.
  Coefficients mix = Coefficients::Uniform(1.0);
  // "allow" (default) calibrates against the clamped expectation; "refuse"
  // rejects rates that need any probability above 1.
  bool allow_clamping = true;

  std::optional<uint64_t> seed;
  ConfusionMode confusion = ConfusionMode::kEnforced;
  std::string placeholder = "<UNK>";
  int max_distance = 2;
  bool word_splits = false;
  int max_cost = 4;
  uint64_t tie_seed = 0;

  // Throws kInvalidArgument for unknown keys and unparsable values.
  void Set(std::string_view key, std::string_view value);
  // Throws kFormat naming the line on malformed input, kIo if unreadable.
  void LoadFile(const std::filesystem::path& path);
  // Checks what a corrupt run needs.
  void ValidateForCorrupt() const;
  // Sorted `key=value` lines of every setting that affects outputs.
  std::string Canonical() const;
};

std::string Sha256Hex(std::string_view bytes);
// Throws kIo.
std::string Sha256File(const std::filesystem::path& path);

// From TYPOGEN_WORKERS when set to a positive integer, else the hardware
// concurrency (at least 1).
std::size_t WorkerCount();

struct InduceSummary {
  std::size_t pairs = 0;
  std::size_t skipped = 0;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  CategoryTally categories;
  std::vector<std::string> warnings;
};

// Reads config.seed_corpus and writes the induced model to config.model.
// Throws kNoUsablePairs when no pair survives.
InduceSummary RunInduce(const PipelineConfig& config);

struct CorruptSummary {
  std::size_t documents = 0;
  std::size_t kept = 0;
  std::size_t rejected = 0;
  uint64_t characters = 0;  // alphabet characters of the kept text
  uint64_t tokens = 0;
  uint64_t edits = 0;
  Coefficients coefficients;
  double expected_rate = 0;
  double observed_rate = 0;        // edits / characters
  double corrupted_word_rate = 0;  // before confusion
  double final_word_rate = 0;      // after confusion; equals the label rate
  double clamped_share = 0;        // error mass removed by clamping
  uint64_t positive_labels = 0;
  std::vector<std::string> warnings;
};

// clean -> rebase -> calibrate -> corrupt -> confuse -> emit, streaming the
// corpus twice. Writes original.txt, corrupted.txt, confused.txt, edits.tsv,
// dataset.jsonl, rejects.tsv and manifest.json into config.output_dir.
// Errors carry the failing stage's name.
CorruptSummary RunCorrupt(const PipelineConfig& config);

struct StatsInputs {
  std::filesystem::path seed_corpus;  // aligned with `layout`
  std::filesystem::path layout;
  std::filesystem::path model;
  std::filesystem::path edits;
  std::filesystem::path original;  // with `corrupted`: word rate
  std::filesystem::path corrupted;
  std::filesystem::path output_dir;
};

// Builds one report from whichever inputs are given and exports the tables.
StatsReport RunStats(const StatsInputs& inputs);

// Corpus BLEU of `candidates` against `references`, one document per line.
double RunBleu(const std::filesystem::path& references,
               const std::filesystem::path& candidates, int max_n = 4);

}  // namespace typogen

#endif  // TYPOGEN_PIPELINE_H_

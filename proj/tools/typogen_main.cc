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

// typogen: induce a typo model, corrupt a corpus, report statistics and BLEU.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "typogen/error.h"
#include "typogen/pipeline.h"

namespace {

using typogen::PipelineConfig;

// Flags mirror the config-file keys; flags given on the command line win
// over the config file.
struct Settings {
  std::string config_file;
  std::map<std::string, std::string> values;

  void Flag(CLI::App* app, const std::string& key, const std::string& help) {
    std::string flag = "--" + key;
    for (char& c : flag) {
      if (c == '_' || c == '.') c = '-';
    }
    app->add_option_function<std::string>(
        flag, [this, key](const std::string& v) { values[key] = v; }, help);
  }

  PipelineConfig Resolve() const {
    PipelineConfig config;
    if (!config_file.empty()) config.LoadFile(config_file);
    for (const auto& [key, value] : values) config.Set(key, value);
    return config;
  }
};

void PrintCategories(const typogen::CategoryTally& tally) {
  const uint64_t total = tally.total();
  for (typogen::ErrorCategory c : typogen::kAllCategories) {
    const uint64_t n = tally.counts[typogen::CategoryIndex(c)];
    fmt::print("  {:<14} {:>8}  {:6.2f}%\n", typogen::CategoryName(c), n,
               total == 0 ? 0.0 : 100.0 * static_cast<double>(n) / static_cast<double>(total));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthetic typo generation from an annotated seed corpus"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(typogen::kToolVersion));

  Settings induce;
  CLI::App* induce_cmd = app.add_subcommand("induce", "Induce a noise model from typo<TAB>correct pairs");
  induce_cmd->add_option("--config", induce.config_file, "key = value config file");
  induce.Flag(induce_cmd, "seed_corpus", "Seed corpus of typo<TAB>correct lines");
  induce.Flag(induce_cmd, "model", "Output model file");
  induce.Flag(induce_cmd, "layout", "Keyboard layout file (default: built-in QWERTY)");
  induce.Flag(induce_cmd, "max_cost", "Discard pairs with a larger edit distance (default 4)");
  induce.Flag(induce_cmd, "tie_seed", "Seed for keyboard-distance ties (default 0)");

  Settings corrupt;
  CLI::App* corrupt_cmd = app.add_subcommand("corrupt", "Corrupt a corpus and emit a labeled dataset");
  corrupt_cmd->add_option("--config", corrupt.config_file, "key = value config file");
  corrupt.Flag(corrupt_cmd, "model", "Model file from `induce`");
  corrupt.Flag(corrupt_cmd, "corpus", "Clean corpus, one document per line");
  corrupt.Flag(corrupt_cmd, "lexicon", "Lexicon of word<TAB>count lines");
  corrupt.Flag(corrupt_cmd, "output_dir", "Directory for all outputs");
  corrupt.Flag(corrupt_cmd, "level", "Error level: low (3.75%), medium (7.5%), high (15%)");
  corrupt.Flag(corrupt_cmd, "rate", "Explicit character error rate in [0, 1)");
  corrupt.Flag(corrupt_cmd, "coefficients", "Five explicit weights sub,ins,repl,del,trans; skips calibration");
  for (const char* name : {"substitution", "insertion", "replication", "deletion", "transposition"}) {
    corrupt.Flag(corrupt_cmd, std::string("weight.") + name,
                 fmt::format("Relative {} weight before calibration (default 1)", name));
  }
  corrupt.Flag(corrupt_cmd, "clamping", "allow (default) or refuse probabilities scaled above 1");
  corrupt.Flag(corrupt_cmd, "seed", "Random seed (required)");
  corrupt.Flag(corrupt_cmd, "confusion", "enforced (default), best-suggestion or off");
  corrupt.Flag(corrupt_cmd, "placeholder", "Token for words erased entirely (default <UNK>)");
  corrupt.Flag(corrupt_cmd, "max_distance", "Suggestion search radius (default 2)");
  corrupt.Flag(corrupt_cmd, "word_splits", "Also suggest two-word splits (default false)");

  typogen::StatsInputs stats;
  CLI::App* stats_cmd = app.add_subcommand("stats", "Export category and character tables as CSV");
  stats_cmd->add_option("--seed-corpus", stats.seed_corpus, "Seed corpus to align and tally");
  stats_cmd->add_option("--layout", stats.layout, "Keyboard layout for --seed-corpus");
  stats_cmd->add_option("--model", stats.model, "Model file to tally");
  stats_cmd->add_option("--edits", stats.edits, "Edit log (edits.tsv) to tally");
  stats_cmd->add_option("--original", stats.original, "Original corpus for the word rate");
  stats_cmd->add_option("--corrupted", stats.corrupted, "Corrupted corpus for the word rate");
  stats_cmd->add_option("--output-dir", stats.output_dir, "Directory for the CSV tables")->required();

  std::string references;
  std::string candidates;
  int max_n = 4;
  CLI::App* bleu_cmd = app.add_subcommand("bleu", "Corpus BLEU of candidates against references");
  bleu_cmd->add_option("references", references, "Reference corpus")->required();
  bleu_cmd->add_option("candidates", candidates, "Candidate corpus")->required();
  bleu_cmd->add_option("--max-n", max_n, "Largest n-gram order (default 4)")->check(CLI::Range(1, 4));

  CLI11_PARSE(app, argc, argv);

  try {
    if (induce_cmd->parsed()) {
      const PipelineConfig config = induce.Resolve();
      if (config.seed_corpus.empty() || config.model.empty()) {
        throw typogen::Error(typogen::ErrorCode::kInvalidArgument,
                             "induce needs --seed-corpus and --model");
      }
      const typogen::InduceSummary s = typogen::RunInduce(config);
      fmt::print("pairs {}  skipped {}  accepted {}  rejected {}\n", s.pairs, s.skipped,
                 s.accepted, s.rejected);
      PrintCategories(s.categories);
      for (const std::string& w : s.warnings) fmt::print(stderr, "warning: {}\n", w);
      fmt::print("model written to {}\n", config.model.string());
    } else if (corrupt_cmd->parsed()) {
      const typogen::CorruptSummary s = typogen::RunCorrupt(corrupt.Resolve());
      for (const std::string& w : s.warnings) fmt::print(stderr, "warning: {}\n", w);
      fmt::print("documents {}  kept {}  rejected {}\n", s.documents, s.kept, s.rejected);
      fmt::print("coefficients {:.6g} {:.6g} {:.6g} {:.6g} {:.6g}\n", s.coefficients.weights[0],
                 s.coefficients.weights[1], s.coefficients.weights[2],
                 s.coefficients.weights[3], s.coefficients.weights[4]);
      fmt::print("characters {}  edits {}  expected rate {:.6f}  observed rate {:.6f}\n",
                 s.characters, s.edits, s.expected_rate, s.observed_rate);
      fmt::print("tokens {}  corrupted words {:.4f}  after confusion {:.4f}\n", s.tokens,
                 s.corrupted_word_rate, s.final_word_rate);
    } else if (stats_cmd->parsed()) {
      const typogen::StatsReport report = typogen::RunStats(stats);
      if (report.categories.total() > 0) PrintCategories(report.categories);
      if (report.words.tokens > 0) {
        fmt::print("corrupted word rate {:.6f} ({} of {})\n", report.words.rate(),
                   report.words.corrupted, report.words.tokens);
      }
      fmt::print("tables written to {}\n", stats.output_dir.string());
    } else if (bleu_cmd->parsed()) {
      fmt::print("{:.6f}\n", typogen::RunBleu(references, candidates, max_n));
    }
  } catch (const typogen::Error& e) {
    fmt::print(stderr, "typogen: {}\n", e.what());
    return EXIT_FAILURE;
  } catch (const std::exception& e) {
    fmt::print(stderr, "typogen: {}\n", e.what());
    return EXIT_FAILURE;
  }
  return EXIT_SUCCESS;
}

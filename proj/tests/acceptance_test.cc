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

// Acceptance checks, one PASS/FAIL line each. Tolerances are fixed here and
// never adjusted to the observed values.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "test_util.h"
#include "typogen/dataset_emitter.h"
#include "typogen/error.h"
#include "typogen/eval_stats.h"
#include "typogen/keyboard_model.h"
#include "typogen/noise_model.h"
#include "typogen/pipeline.h"
#include "typogen/random.h"
#include "typogen/spell_suggester.h"

namespace typogen {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Criterion 1
constexpr double kOracleSeconds = 1.0;
// Criterion 2
constexpr double kAcceptedShare = 0.95;
constexpr double kRoundTripSeconds = 30.0;
// Criterion 3
constexpr double kDominantShare = 0.75;
// Criterion 4
constexpr double kRateTolerance = 0.002;
constexpr uint64_t kMinCharacters = 1000000;
// Criterion 5
constexpr uint64_t kMinWords = 100000;
// Criterion 6 and 5 bands, by level.
struct LevelBands {
  const char* level;
  double word_low, word_high;
  double bleu_low, bleu_high;
};
constexpr LevelBands kBands[] = {
    {"low", 0.12, 0.20, 0.55, 0.72},
    {"medium", 0.24, 0.32, 0.33, 0.50},
    {"high", 0.38, 0.54, 0.12, 0.25},
};
// Criterion 8
constexpr double kNormalizationTolerance = 1e-9;
constexpr int kSuggesterQueries = 1000;

int failures = 0;

void Report(int criterion, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << detail
            << std::endl;
  failures += !pass;
}

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::vector<std::string> Lines(const fs::path& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// Parses the hand-counted oracle and compares every listed entry exactly;
// every unlisted event probability must be zero.
bool MatchesOracle(const NoiseModel& m, std::string* why) {
  std::ifstream in(testing::TestDataDir() / "fixture10_expected.txt");
  std::set<std::string> listed;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream f(line);
    std::vector<std::string> w;
    for (std::string s; f >> s;) w.push_back(s);
    const std::string& table = w[0];
    const std::string& ctx = w[1];
    if (table == "char") {
      if (m.counts().CharFreq(ctx[0]) != std::stoull(w[2])) return *why = line, false;
      continue;
    }
    if (table == "bigram") {
      if (m.counts().BigramFreq(ctx[0], w[2][0]) != std::stoull(w[3])) return *why = line, false;
      continue;
    }
    const std::string& ratio = w.back();
    const auto slash = ratio.find('/');
    const Fraction want{std::stoll(ratio.substr(0, slash)), std::stoll(ratio.substr(slash + 1))};
    Fraction got;
    const char c = ctx[0];
    if (table == "substitution") got = m.Substitution(c);
    else if (table == "substitution_pair") got = m.SubstitutionPair(w[2][0], c);
    else if (table == "insertion_before") got = m.Insertion(c, InsertionSide::kBefore);
    else if (table == "insertion_after") got = m.Insertion(c, InsertionSide::kAfter);
    else if (table == "insertion_pair_before") got = m.InsertionPair(w[2][0], c, InsertionSide::kBefore);
    else if (table == "insertion_pair_after") got = m.InsertionPair(w[2][0], c, InsertionSide::kAfter);
    else if (table == "replication") got = m.Replication(c);
    else if (table == "deletion") got = m.Deletion(c);
    else if (table == "transposition") got = m.Transposition(ctx[0], ctx[1]);
    else return *why = "unknown table " + table, false;
    if (!(got == want)) {
      return *why = fmt::format("{} gave {}/{}", line, got.numerator, got.denominator), false;
    }
    listed.insert(table + " " + ctx);
  }
  for (char c = 'a'; c <= 'z'; ++c) {
    const std::string s(1, c);
    auto zero = [&](const std::string& key, Fraction f) {
      return listed.count(key) > 0 || f.numerator == 0;
    };
    if (!zero("substitution " + s, m.Substitution(c)) ||
        !zero("insertion_before " + s, m.Insertion(c, InsertionSide::kBefore)) ||
        !zero("insertion_after " + s, m.Insertion(c, InsertionSide::kAfter)) ||
        !zero("replication " + s, m.Replication(c)) || !zero("deletion " + s, m.Deletion(c))) {
      return *why = "unlisted nonzero event for " + s, false;
    }
    for (char d = 'a'; d <= 'z'; ++d) {
      if (!zero("transposition " + s + d, m.Transposition(c, d))) {
        return *why = fmt::format("unlisted transposition {}{}", c, d), false;
      }
    }
  }
  return true;
}

void Criterion1() {
  const auto start = Clock::now();
  std::ifstream in(testing::TestDataDir() / "fixture10.tsv");
  const SeedCorpus corpus = ParseSeedCorpus(in);
  const NoiseModel model =
      NoiseModel::Induce(AccumulateCounts(corpus.pairs, KeyboardLayout::Qwerty()).counts);
  std::string why;
  const bool match = MatchesOracle(model, &why);
  const double seconds = Seconds(start);
  Report(1, match && seconds < kOracleSeconds,
         fmt::format("fixture tables {} the hand-counted oracle; {:.3f} s (limit {} s){}",
                     match ? "equal" : "differ from", seconds, kOracleSeconds,
                     match ? "" : "; " + why));
}

void Criterion2() {
  const auto start = Clock::now();
  std::ifstream in(testing::DataDir() / "seed" / "typo_pairs.tsv");
  const SeedCorpus corpus = ParseSeedCorpus(in);
  const KeyboardLayout layout = KeyboardLayout::Qwerty();
  std::size_t accepted = 0;
  std::size_t replayed = 0;
  for (const TypoPair& pair : corpus.pairs) {
    const Alignment a = AlignPair(pair, layout);
    if (a.cost > AccumulateOptions{}.max_cost) continue;
    ++accepted;
    replayed += ApplyEditScript(pair.correct, a.script) == pair.typo;
  }
  const double seconds = Seconds(start);
  const double share = static_cast<double>(accepted) / corpus.pairs.size();
  Report(2, replayed == accepted && share >= kAcceptedShare && seconds < kRoundTripSeconds,
         fmt::format("{} of {} accepted pairs replay exactly; {} of {} pairs accepted ({:.2f}%, "
                     "need >= {}%); {:.2f} s (limit {} s)",
                     replayed, accepted, accepted, corpus.pairs.size(), 100 * share,
                     100 * kAcceptedShare, seconds, kRoundTripSeconds));
}

void Criterion3() {
  const CategoryProportions p =
      CategoryDistribution(CategoryTally::FromCounts(testing::SeedCounts().counts));
  const double dominant = p[CategoryIndex(ErrorCategory::kSubstitution)] +
                          p[CategoryIndex(ErrorCategory::kInsertion)] +
                          p[CategoryIndex(ErrorCategory::kDeletion)];
  Report(3, dominant >= kDominantShare,
         fmt::format("substitution+insertion+deletion = {:.4f} (need >= {}); mix sub {:.4f} "
                     "ins {:.4f} repl {:.4f} del {:.4f} trans {:.4f}",
                     dominant, kDominantShare, p[0], p[1], p[2], p[3], p[4]));
}

struct LevelRun {
  CorruptSummary first;
  CorruptSummary second;
  fs::path dir;
};

PipelineConfig CorruptConfig(const fs::path& root, const fs::path& model,
                             const std::string& level, uint64_t seed, const std::string& name) {
  PipelineConfig c;
  c.model = model;
  c.corpus = testing::DataDir() / "corpus" / "reviews.txt";
  c.lexicon = testing::DataDir() / "lexicon" / "en_lexicon.tsv";
  c.output_dir = root / name;
  c.Set("level", level);
  c.seed = seed;
  return c;
}

bool ModelNormalized(const NoiseModel& m, std::string* why) {
  const std::string& chars = m.alphabet().chars();
  for (char c : chars) {
    double sub = 0, before = 0, after = 0;
    for (char x : chars) {
      sub += m.SubstitutionPair(x, c).value();
      before += m.InsertionPair(x, c, InsertionSide::kBefore).value();
      after += m.InsertionPair(x, c, InsertionSide::kAfter).value();
    }
    auto row = [&](uint64_t evidence, double sum, const char* table) {
      const double want = evidence > 0 ? 1.0 : 0.0;
      if (std::abs(sum - want) > kNormalizationTolerance) {
        *why = fmt::format("{} row {} sums to {:.12f}", table, c, sum);
        return false;
      }
      return true;
    };
    if (!row(m.counts().SubstitutionTotal(c), sub, "substitution") ||
        !row(m.counts().InsertionSideTotal(c, InsertionSide::kBefore), before, "insertion_before") ||
        !row(m.counts().InsertionSideTotal(c, InsertionSide::kAfter), after, "insertion_after")) {
      return false;
    }
    for (Fraction f : {m.Substitution(c), m.Insertion(c, InsertionSide::kBefore),
                       m.Insertion(c, InsertionSide::kAfter), m.Replication(c), m.Deletion(c)}) {
      if (f.value() < 0 || f.value() > 1) return *why = fmt::format("event for {} out of [0,1]", c), false;
    }
  }
  return true;
}

std::string Digest(const fs::path& dir) {
  std::string out;
  for (const char* name : {"corrupted.txt", "confused.txt", "edits.tsv", "dataset.jsonl"}) {
    out += Sha256File(dir / name);
  }
  return out;
}

void SetWorkers(const char* value) { ::setenv("TYPOGEN_WORKERS", value, 1); }

int Run() {
  Criterion1();
  Criterion2();
  Criterion3();

  testing::ScratchDir scratch("acceptance");
  const fs::path root = scratch.path();
  const fs::path model_path = root / "model.json";
  PipelineConfig induce;
  induce.seed_corpus = testing::DataDir() / "seed" / "typo_pairs.tsv";
  induce.model = model_path;
  RunInduce(induce);

  // Each level runs twice with different seeds; together the runs cover
  // more than a million alphabet characters.
  std::vector<LevelRun> runs;
  SetWorkers("1");
  for (const LevelBands& band : kBands) {
    LevelRun run;
    run.first = RunCorrupt(CorruptConfig(root, model_path, band.level, 1, std::string(band.level) + "_a"));
    run.second = RunCorrupt(CorruptConfig(root, model_path, band.level, 2, std::string(band.level) + "_b"));
    run.dir = root / (std::string(band.level) + "_a");
    runs.push_back(run);
  }

  {
    bool pass = true;
    std::string detail;
    for (std::size_t i = 0; i < runs.size(); ++i) {
      const double target = LevelRate(kBands[i].level);
      const uint64_t chars = runs[i].first.characters + runs[i].second.characters;
      const uint64_t edits = runs[i].first.edits + runs[i].second.edits;
      const double observed = static_cast<double>(edits) / static_cast<double>(chars);
      const bool ok = chars >= kMinCharacters && std::abs(observed - target) <= kRateTolerance;
      pass &= ok;
      detail += fmt::format("{}{} {:.6f} vs {} over {} chars", i ? "; " : "", kBands[i].level,
                            observed, target, chars);
    }
    Report(4, pass, detail + fmt::format(" (tolerance {}, need >= {} chars)", kRateTolerance,
                                         kMinCharacters));
  }

  {
    bool pass = true;
    std::string detail;
    for (std::size_t i = 0; i < runs.size(); ++i) {
      const CorruptSummary& s = runs[i].first;
      const LevelBands& b = kBands[i];
      const bool ok = s.tokens >= kMinWords && s.corrupted_word_rate >= b.word_low &&
                      s.corrupted_word_rate <= b.word_high && s.final_word_rate >= b.word_low &&
                      s.final_word_rate <= b.word_high;
      pass &= ok;
      detail += fmt::format("{}{} {:.4f} generated / {:.4f} after confusion in [{}, {}]",
                            i ? "; " : "", b.level, s.corrupted_word_rate, s.final_word_rate,
                            b.word_low, b.word_high);
    }
    Report(5, pass, detail + fmt::format(" over {} words", runs[0].first.tokens));
  }

  {
    bool pass = true;
    std::string detail;
    double previous = 2.0;
    for (std::size_t i = 0; i < runs.size(); ++i) {
      const double bleu = RunBleu(runs[i].dir / "original.txt", runs[i].dir / "confused.txt");
      const LevelBands& b = kBands[i];
      pass &= bleu >= b.bleu_low && bleu <= b.bleu_high && bleu < previous;
      previous = bleu;
      detail += fmt::format("{}{} {:.4f} in [{}, {}]", i ? "; " : "", b.level, bleu, b.bleu_low,
                            b.bleu_high);
    }
    Report(6, pass, detail + "; strictly decreasing required");
  }

  {
    const PipelineConfig base = CorruptConfig(root, model_path, "medium", 1, "medium_a");
    PipelineConfig again = CorruptConfig(root, model_path, "medium", 1, "medium_again");
    PipelineConfig threaded = CorruptConfig(root, model_path, "medium", 1, "medium_threaded");
    SetWorkers("1");
    RunCorrupt(again);
    SetWorkers("4");
    RunCorrupt(threaded);
    SetWorkers("1");
    const std::string reference = Digest(base.output_dir);
    const bool same_run = reference == Digest(again.output_dir);
    const bool same_workers = reference == Digest(threaded.output_dir);
    Report(7, same_run && same_workers,
           fmt::format("repeat run {}; 4 workers vs 1 {} (corrupted, confused, edits, dataset)",
                       same_run ? "byte-identical" : "DIFFERS",
                       same_workers ? "byte-identical" : "DIFFERS"));
  }

  {
    std::vector<std::string> problems;
    // Normalization on the seed, rebased and reloaded models.
    std::string why;
    const NoiseModel& seed = testing::SeedModel();
    CharDistribution target;
    for (const Tokens& d : testing::CleanReviews()) target.AddText(JoinTokens(d));
    const NoiseModel rebased = RebaseFrequencies(seed, target);
    std::ifstream model_in(model_path);
    const NoiseModel loaded = LoadModel(model_in);
    for (const auto& [name, m] : {std::pair<const char*, const NoiseModel*>{"seed", &seed},
                                  {"rebased", &rebased}, {"loaded", &loaded}}) {
      if (!ModelNormalized(*m, &why)) problems.push_back(fmt::format("{} model: {}", name, why));
    }
    // Token counts and labels over every emitted document.
    uint64_t documents = 0;
    for (const LevelRun& run : runs) {
      const std::vector<std::string> original = Lines(run.dir / "original.txt");
      const std::vector<std::string> corrupted = Lines(run.dir / "corrupted.txt");
      const std::vector<std::string> confused = Lines(run.dir / "confused.txt");
      std::ifstream in(run.dir / "dataset.jsonl");
      DatasetReader reader(in);
      std::size_t d = 0;
      for (LabeledDocument doc; reader.Next(doc); ++d, ++documents) {
        const std::size_t n = Tokenize(original[d]).size();
        if (Tokenize(corrupted[d]).size() != n || Tokenize(confused[d]).size() != n ||
            doc.tokens.size() != n) {
          problems.push_back(fmt::format("{} document {} changed its token count",
                                         run.dir.filename().string(), d));
          break;
        }
        for (const LabeledToken& t : doc.tokens) {
          if (t.label != (t.surface != t.original)) {
            problems.push_back("unsound label in " + run.dir.filename().string());
          }
        }
      }
      if (d != original.size()) problems.push_back("dataset and text disagree on document count");
    }
    // Suggester against a full scan, and confusion never restoring the
    // original when there is a choice.
    const Lexicon& lexicon = testing::BundledLexicon();
    const SpellSuggester suggester(lexicon);
    Rng rng = Rng::ForStream(8, 8);
    int mismatches = 0;
    int enforced = 0;
    int restored = 0;
    for (int q = 0; q < kSuggesterQueries; ++q) {
      const std::string word = lexicon.word(static_cast<uint32_t>(rng.Below(lexicon.size())));
      std::string query = word;
      for (int e = 0, edits = 1 + static_cast<int>(rng.Below(2)); e < edits; ++e) {
        const std::size_t i = rng.Below(query.size() + 1);
        const char letter = static_cast<char>('a' + rng.Below(26));
        switch (rng.Below(3)) {
          case 0: query.insert(query.begin() + i, letter); break;
          case 1: if (query.size() > 1 && i < query.size()) query.erase(i, 1); break;
          default: if (i < query.size()) query[i] = letter; break;
        }
      }
      std::vector<Suggestion> brute;
      for (uint32_t id = 0; id < lexicon.size(); ++id) {
        const std::string& w = lexicon.word(id);
        const int d = OsaDistance(query, w);
        if (d <= 2) brute.push_back({w, d, lexicon.frequency(id)});
      }
      std::sort(brute.begin(), brute.end(), SuggestionBefore);
      const std::vector<Suggestion> got = suggester.Suggest(query);
      mismatches += got != brute;
      if (!lexicon.Contains(query) && got.size() >= 2) {
        ++enforced;
        restored += EnforceConfusion(query, word, suggester) == word;
      }
    }
    if (mismatches > 0) problems.push_back(fmt::format("{} suggester mismatches", mismatches));
    if (restored > 0) problems.push_back(fmt::format("{} confusions restored the original", restored));
    Report(8, problems.empty(),
           problems.empty()
               ? fmt::format("normalization within {} on seed/rebased/loaded models; token counts "
                             "and labels sound on {} documents; suggester equals a full scan "
                             "on {} queries; {} enforced confusions avoid the original",
                             kNormalizationTolerance, documents, kSuggesterQueries, enforced)
               : fmt::format("{}", fmt::join(problems, "; ")));
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}

}  // namespace
}  // namespace typogen

int main() {
  try {
    return typogen::Run();
  } catch (const std::exception& e) {
    std::cout << "FAIL acceptance run aborted: " << e.what() << std::endl;
    return EXIT_FAILURE;
  }
}

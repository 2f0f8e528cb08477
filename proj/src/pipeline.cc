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

#include "typogen/pipeline.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "typogen/dataset_emitter.h"
#include "typogen/error.h"
#include "typogen/error_generator.h"
#include "typogen/keyboard_model.h"
#include "typogen/lexicon.h"
#include "typogen/spell_suggester.h"
#include "typogen/typo_alignment.h"

namespace typogen {
namespace {

namespace fs = std::filesystem;

// Documents handed to the worker pool at a time; bounds memory.
constexpr std::size_t kBatchSize = 2048;

std::string_view Trim(std::string_view s) {
  const auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\r' && c != '\n'; };
  while (!s.empty() && !not_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && !not_space(s.back())) s.remove_suffix(1);
  return s;
}

Error BadValue(std::string_view key, std::string_view value, std::string_view why) {
  return Error(ErrorCode::kInvalidArgument,
               fmt::format("{} = '{}': {}", key, value, why));
}

template <typename T>
T ParseNumber(std::string_view key, std::string_view value) {
  T out{};
  const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || end != value.data() + value.size() || value.empty()) {
    throw BadValue(key, value, "not a number");
  }
  return out;
}

bool ParseBool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw BadValue(key, value, "expected true or false");
}

std::ifstream OpenInput(const fs::path& path, std::string_view what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, fmt::format("cannot open {} '{}'", what, path.string()));
  return in;
}

std::ofstream OpenOutput(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  return out;
}

KeyboardLayout LoadLayout(const fs::path& path) {
  return path.empty() ? KeyboardLayout::Qwerty() : KeyboardLayout::Load(path);
}

// Runs `fn` under `stage`, tagging typogen errors with the stage name.
template <typename Fn>
auto Stage(std::string_view stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error::InContext(e, stage);
  }
}

void ParallelFor(std::size_t n, std::size_t workers,
                 const std::function<void(std::size_t)>& fn) {
  workers = std::min(workers, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < n && !failed; i = next++) {
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::string Hex(const unsigned char* bytes, unsigned int n) {
  std::string out;
  out.reserve(2 * n);
  for (unsigned int i = 0; i < n; ++i) out += fmt::format("{:02x}", bytes[i]);
  return out;
}

struct Sha256 {
  Sha256() : ctx(EVP_MD_CTX_new()) {
    if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
      throw Error(ErrorCode::kIo, "SHA-256 unavailable");
    }
  }
  ~Sha256() { EVP_MD_CTX_free(ctx); }
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  void Update(const void* data, std::size_t n) { EVP_DigestUpdate(ctx, data, n); }
  std::string Final() {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int n = 0;
    EVP_DigestFinal_ex(ctx, digest, &n);
    return Hex(digest, n);
  }

  EVP_MD_CTX* ctx;
};

std::vector<Tokens> ReadDocuments(const fs::path& path, std::string_view what) {
  std::ifstream in = OpenInput(path, what);
  std::vector<Tokens> docs;
  std::string line;
  while (std::getline(in, line)) docs.push_back(Tokenize(line));
  return docs;
}

Tokens Lowered(const Tokens& tokens) {
  Tokens out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) out.push_back(AsciiLower(t));
  return out;
}

Tokens WithPlaceholder(Tokens tokens, std::string_view placeholder) {
  for (std::string& t : tokens) {
    if (t.empty()) t = placeholder;
  }
  return tokens;
}

struct DocumentOutput {
  std::string original;
  std::string corrupted;
  std::string confused;
  std::string edits;
  std::string record;
  WordTally corrupted_words;
  WordTally final_words;
  uint64_t characters = 0;
  uint64_t edit_count = 0;
  uint64_t positives = 0;
};

}  // namespace

std::string_view ConfusionModeName(ConfusionMode mode) {
  switch (mode) {
    case ConfusionMode::kEnforced: return "enforced";
    case ConfusionMode::kBestSuggestion: return "best-suggestion";
    case ConfusionMode::kOff: return "off";
  }
  return "unknown";
}

ConfusionMode ParseConfusionMode(std::string_view name) {
  for (ConfusionMode m : {ConfusionMode::kEnforced, ConfusionMode::kBestSuggestion,
                          ConfusionMode::kOff}) {
    if (ConfusionModeName(m) == name) return m;
  }
  throw Error(ErrorCode::kInvalidArgument,
              fmt::format("unknown confusion mode '{}' (enforced, best-suggestion, off)", name));
}

double LevelRate(std::string_view level) {
  if (level == "low") return 0.0375;
  if (level == "medium") return 0.075;
  if (level == "high") return 0.15;
  throw Error(ErrorCode::kInvalidArgument,
              fmt::format("unknown error level '{}' (low, medium, high)", level));
}

void PipelineConfig::Set(std::string_view key, std::string_view raw) {
  const std::string_view value = Trim(raw);
  if (key == "seed_corpus") {
    seed_corpus = std::string(value);
  } else if (key == "layout") {
    layout = std::string(value);
  } else if (key == "lexicon") {
    lexicon = std::string(value);
  } else if (key == "corpus") {
    corpus = std::string(value);
  } else if (key == "model") {
    model = std::string(value);
  } else if (key == "output_dir") {
    output_dir = std::string(value);
  } else if (key == "level") {
    LevelRate(value);
    level = std::string(value);
  } else if (key == "rate") {
    const double r = ParseNumber<double>(key, value);
    if (!(r >= 0.0 && r < 1.0)) throw BadValue(key, value, "must lie in [0, 1)");
    rate = r;
  } else if (key == "coefficients") {
    Coefficients c;
    std::size_t k = 0;
    std::string_view rest = value;
    while (true) {
      const std::size_t comma = rest.find(',');
      if (k == kNumCategories) throw BadValue(key, value, "expected five weights");
      c.weights[k++] = ParseNumber<double>(key, Trim(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (k != kNumCategories) throw BadValue(key, value, "expected five weights");
    for (double w : c.weights) {
      if (!(w >= 0.0) || !std::isfinite(w)) throw BadValue(key, value, "weights must be >= 0");
    }
    coefficients = c;
  } else if (key.starts_with("weight.")) {
    const auto category = ParseCategory(key.substr(7));
    if (!category) throw BadValue(key, value, "unknown category");
    const double w = ParseNumber<double>(key, value);
    if (!(w >= 0.0) || !std::isfinite(w)) throw BadValue(key, value, "weight must be >= 0");
    mix[*category] = w;
  } else if (key == "clamping") {
    if (value == "allow") {
      allow_clamping = true;
    } else if (value == "refuse") {
      allow_clamping = false;
    } else {
      throw BadValue(key, value, "expected allow or refuse");
    }
  } else if (key == "seed") {
    seed = ParseNumber<uint64_t>(key, value);
  } else if (key == "confusion") {
    confusion = ParseConfusionMode(value);
  } else if (key == "placeholder") {
    placeholder = std::string(value);
  } else if (key == "max_distance") {
    max_distance = ParseNumber<int>(key, value);
    if (max_distance < 0 || max_distance > 3) throw BadValue(key, value, "must lie in [0, 3]");
  } else if (key == "word_splits") {
    word_splits = ParseBool(key, value);
  } else if (key == "max_cost") {
    max_cost = ParseNumber<int>(key, value);
    if (max_cost < 0) throw BadValue(key, value, "must be >= 0");
  } else if (key == "tie_seed") {
    tie_seed = ParseNumber<uint64_t>(key, value);
  } else {
    throw Error(ErrorCode::kInvalidArgument, fmt::format("unknown setting '{}'", key));
  }
}

void PipelineConfig::LoadFile(const fs::path& path) {
  std::ifstream in = OpenInput(path, "config file");
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = Trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kFormat,
                  fmt::format("{}:{}: expected key = value", path.string(), line_number));
    }
    try {
      Set(Trim(view.substr(0, eq)), view.substr(eq + 1));
    } catch (const Error& e) {
      throw Error(ErrorCode::kFormat,
                  fmt::format("{}:{}: {}", path.string(), line_number, e.what()));
    }
  }
}

void PipelineConfig::ValidateForCorrupt() const {
  const int drivers = level.has_value() + rate.has_value() + coefficients.has_value();
  if (drivers != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "set exactly one of level, rate and coefficients");
  }
  if (!seed) throw Error(ErrorCode::kInvalidArgument, "a seed is required");
  for (const auto& [name, path] : {std::pair{"model", &model}, {"corpus", &corpus},
                                   {"lexicon", &lexicon}, {"output_dir", &output_dir}}) {
    if (path->empty()) {
      throw Error(ErrorCode::kInvalidArgument, fmt::format("{} is required", name));
    }
  }
  GenerationConfig probe;
  probe.placeholder = placeholder;
  probe.coefficients = coefficients.value_or(mix);
  probe.Validate();
}

std::string PipelineConfig::Canonical() const {
  std::vector<std::string> lines;
  if (coefficients) {
    lines.push_back(fmt::format("coefficients={}", fmt::join(coefficients->weights, ",")));
  }
  lines.push_back(fmt::format("clamping={}", allow_clamping ? "allow" : "refuse"));
  lines.push_back(fmt::format("confusion={}", ConfusionModeName(confusion)));
  if (level) lines.push_back(fmt::format("level={}", *level));
  lines.push_back(fmt::format("max_distance={}", max_distance));
  lines.push_back(fmt::format("placeholder={}", placeholder));
  if (rate) lines.push_back(fmt::format("rate={}", *rate));
  if (seed) lines.push_back(fmt::format("seed={}", *seed));
  for (ErrorCategory c : kAllCategories) {
    lines.push_back(fmt::format("weight.{}={}", CategoryName(c), mix[c]));
  }
  lines.push_back(fmt::format("word_splits={}", word_splits));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& l : lines) out += l + "\n";
  return out;
}

std::string Sha256Hex(std::string_view bytes) {
  Sha256 h;
  h.Update(bytes.data(), bytes.size());
  return h.Final();
}

std::string Sha256File(const fs::path& path) {
  std::ifstream in = OpenInput(path, "file");
  Sha256 h;
  std::vector<char> buffer(1 << 16);
  while (in) {
    in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    h.Update(buffer.data(), static_cast<std::size_t>(in.gcount()));
  }
  return h.Final();
}

std::size_t WorkerCount() {
  if (const char* env = std::getenv("TYPOGEN_WORKERS")) {
    std::size_t n = 0;
    const std::string_view text(env);
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (ec == std::errc() && end == text.data() + text.size() && n > 0) return n;
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

InduceSummary RunInduce(const PipelineConfig& config) {
  return Stage("induce", [&] {
    InduceSummary summary;
    std::ifstream in = OpenInput(config.seed_corpus, "seed corpus");
    SeedCorpus corpus = ParseSeedCorpus(in);
    summary.pairs = corpus.pairs.size();
    summary.skipped = corpus.skipped;
    summary.warnings = corpus.warnings;
    const KeyboardLayout layout = LoadLayout(config.layout);
    AccumulateOptions options;
    options.max_cost = config.max_cost;
    options.tie_seed = config.tie_seed;
    AccumulateResult result = AccumulateCounts(corpus.pairs, layout, options);
    summary.accepted = result.accepted;
    summary.rejected = result.rejected;
    if (result.accepted == 0) {
      throw Error(ErrorCode::kNoUsablePairs,
                  fmt::format("no usable pairs in '{}'", config.seed_corpus.string()));
    }
    summary.categories = CategoryTally::FromCounts(result.counts);
    NoiseModel model = NoiseModel::Induce(result.counts, &summary.warnings);
    if (config.model.has_parent_path()) fs::create_directories(config.model.parent_path());
    std::ofstream out = OpenOutput(config.model);
    SaveModel(model, out);
    out.close();
    if (!out) throw Error(ErrorCode::kIo, "failed writing " + config.model.string());
    return summary;
  });
}

CorruptSummary RunCorrupt(const PipelineConfig& config) {
  Stage("config", [&] { config.ValidateForCorrupt(); });
  CorruptSummary summary;
  const NoiseModel seed_model = Stage("load-model", [&] {
    std::ifstream in = OpenInput(config.model, "model");
    return LoadModel(in);
  });
  const Lexicon lexicon = Stage("lexicon", [&] {
    std::ifstream in = OpenInput(config.lexicon, "lexicon");
    LexiconBuild build = BuildLexicon(in);
    for (auto& w : build.warnings) summary.warnings.push_back(std::move(w));
    return std::move(build.lexicon);
  });
  const fs::path& dir = config.output_dir;
  Stage("output", [&] { fs::create_directories(dir); });

  // Pass 1: cleaning statistics and the target character distribution.
  const CharDistribution target = Stage("clean", [&] {
    CharDistribution dist(seed_model.alphabet());
    std::ifstream in = OpenInput(config.corpus, "corpus");
    std::ofstream rejects = OpenOutput(dir / "rejects.tsv");
    rejects << "doc\ttoken\n";
    std::string line;
    for (std::size_t d = 0; std::getline(in, line); ++d) {
      ++summary.documents;
      const Tokens tokens = Lowered(Tokenize(line));
      if (auto oov = FindOutOfVocabulary(tokens, lexicon)) {
        ++summary.rejected;
        rejects << d << '\t' << *oov << '\n';
        continue;
      }
      ++summary.kept;
      dist.AddText(JoinTokens(tokens));
    }
    if (!rejects) throw Error(ErrorCode::kIo, "failed writing rejects.tsv");
    if (dist.total() == 0) {
      throw Error(ErrorCode::kEmptyCorpus,
                  fmt::format("no characters survive cleaning ({} of {} documents kept)",
                              summary.kept, summary.documents));
    }
    return dist;
  });

  const NoiseModel model = Stage("rebase", [&] {
    std::vector<std::string> clamped;
    NoiseModel rebased = RebaseFrequencies(seed_model, target, &clamped);
    if (!clamped.empty()) {
      summary.warnings.push_back(fmt::format(
          "{} rebased probabilities exceed 1 and were clamped, e.g. {}", clamped.size(),
          clamped.front()));
    }
    return rebased;
  });
  summary.coefficients = Stage("calibrate", [&] {
    if (config.coefficients) return *config.coefficients;
    const double rate = config.rate ? *config.rate : LevelRate(*config.level);
    CalibrationOptions options;
    options.mix = config.mix;
    options.allow_clamping = config.allow_clamping;
    return Calibrate(model, target, rate, options);
  });
  summary.expected_rate = ExpectedErrorRate(model, target, summary.coefficients);
  summary.clamped_share = ClampedShare(model, target, summary.coefficients);
  if (summary.clamped_share > 0) {
    summary.warnings.push_back(fmt::format(
        "clamping removes {:.4f}% of the first-order error mass",
        100.0 * summary.clamped_share));
  }

  std::optional<SpellSuggester> suggester;
  if (config.confusion != ConfusionMode::kOff) {
    Stage("suggester", [&] {
      suggester.emplace(lexicon, SuggesterOptions{config.max_distance, config.word_splits});
    });
  }

  GenerationConfig generation;
  generation.coefficients = summary.coefficients;
  generation.seed = *config.seed;
  generation.placeholder = config.placeholder;
  const ErrorGenerator generator(model, generation);
  const Alphabet& alphabet = model.alphabet();

  auto process = [&](std::size_t d, const Tokens& tokens) {
    DocumentOutput out;
    for (const std::string& t : tokens) {
      for (char c : t) out.characters += alphabet.Contains(c);
    }
    Corruption corruption = generator.Corrupt(tokens, d);
    Tokens final_tokens = corruption.tokens;
    if (suggester) {
      for (std::size_t i = 0; i < final_tokens.size(); ++i) {
        std::string& t = final_tokens[i];
        if (t == tokens[i] || !lexicon.alphabet().Covers(t) || lexicon.Contains(t)) continue;
        t = config.confusion == ConfusionMode::kEnforced
                ? EnforceConfusion(t, tokens[i], *suggester)
                : BestSuggestion(t, *suggester);
      }
    }
    const Tokens corrupted = WithPlaceholder(corruption.tokens, config.placeholder);
    const LabeledDocument labeled = Emit(tokens, final_tokens, config.placeholder);
    out.corrupted_words.AddDocument(tokens, corrupted);
    Tokens surfaces;
    surfaces.reserve(labeled.tokens.size());
    for (const LabeledToken& t : labeled.tokens) {
      surfaces.push_back(t.surface);
      out.positives += t.label;
    }
    out.final_words.AddDocument(tokens, surfaces);
    out.original = JoinTokens(tokens);
    out.corrupted = JoinTokens(corrupted);
    out.confused = JoinTokens(surfaces);
    for (const EditRecord& e : corruption.edits) {
      out.edits += e.ToTsv();
      out.edits.push_back('\n');
    }
    out.edit_count = corruption.edits.size();
    out.record = SerializeRecord(labeled);
    return out;
  };

  // Pass 2: corruption in order-preserving batches.
  Stage("corrupt", [&] {
    std::ifstream in = OpenInput(config.corpus, "corpus");
    std::ofstream original_out = OpenOutput(dir / "original.txt");
    std::ofstream corrupted_out = OpenOutput(dir / "corrupted.txt");
    std::ofstream confused_out = OpenOutput(dir / "confused.txt");
    std::ofstream edits_out = OpenOutput(dir / "edits.tsv");
    std::ofstream dataset_out = OpenOutput(dir / "dataset.jsonl");
    edits_out << "doc\ttoken\tchar\tcategory\tdetail\n";
    DatasetWriter dataset(dataset_out);
    WordTally corrupted_words;
    WordTally final_words;
    const std::size_t workers = WorkerCount();

    std::vector<std::pair<std::size_t, Tokens>> batch;
    std::vector<DocumentOutput> results;
    auto flush = [&] {
      results.assign(batch.size(), DocumentOutput{});
      ParallelFor(batch.size(), workers, [&](std::size_t i) {
        results[i] = process(batch[i].first, batch[i].second);
      });
      for (const DocumentOutput& r : results) {
        original_out << r.original << '\n';
        corrupted_out << r.corrupted << '\n';
        confused_out << r.confused << '\n';
        edits_out << r.edits;
        dataset_out << r.record << '\n';
        corrupted_words.Merge(r.corrupted_words);
        final_words.Merge(r.final_words);
        summary.characters += r.characters;
        summary.edits += r.edit_count;
        summary.positive_labels += r.positives;
      }
      batch.clear();
    };
    std::string line;
    for (std::size_t d = 0; std::getline(in, line); ++d) {
      Tokens tokens = Lowered(Tokenize(line));
      if (FindOutOfVocabulary(tokens, lexicon)) continue;
      batch.emplace_back(d, std::move(tokens));
      if (batch.size() == kBatchSize) flush();
    }
    flush();
    for (std::ofstream* out :
         {&original_out, &corrupted_out, &confused_out, &edits_out, &dataset_out}) {
      out->close();
      if (!*out) throw Error(ErrorCode::kIo, "failed writing outputs in " + dir.string());
    }
    summary.tokens = final_words.tokens;
    summary.corrupted_word_rate = corrupted_words.rate();
    summary.final_word_rate = final_words.rate();
    summary.observed_rate = summary.characters == 0
                                ? 0.0
                                : static_cast<double>(summary.edits) /
                                      static_cast<double>(summary.characters);
  });

  Stage("manifest", [&] {
    nlohmann::json manifest;
    manifest["tool"] = "typogen";
    manifest["version"] = kToolVersion;
    const std::string canonical = config.Canonical();
    manifest["config"] = canonical;
    manifest["config_sha256"] = Sha256Hex(canonical);
    manifest["seed"] = *config.seed;
    manifest["coefficients"] = summary.coefficients.weights;
    manifest["inputs"] = {
        {"corpus", {{"path", config.corpus.string()}, {"sha256", Sha256File(config.corpus)}}},
        {"lexicon", {{"path", config.lexicon.string()}, {"sha256", Sha256File(config.lexicon)}}},
        {"model", {{"path", config.model.string()}, {"sha256", Sha256File(config.model)}}},
    };
    nlohmann::json outputs = nlohmann::json::object();
    for (const char* name : {"confused.txt", "corrupted.txt", "dataset.jsonl", "edits.tsv",
                             "original.txt", "rejects.tsv"}) {
      outputs[name] = Sha256File(dir / name);
    }
    manifest["outputs"] = std::move(outputs);
    manifest["summary"] = {
        {"documents", summary.documents},
        {"kept", summary.kept},
        {"rejected", summary.rejected},
        {"characters", summary.characters},
        {"tokens", summary.tokens},
        {"edits", summary.edits},
        {"expected_rate", summary.expected_rate},
        {"observed_rate", summary.observed_rate},
        {"corrupted_word_rate", summary.corrupted_word_rate},
        {"final_word_rate", summary.final_word_rate},
        {"clamped_share", summary.clamped_share},
    };
    std::ofstream out = OpenOutput(dir / "manifest.json");
    out << manifest.dump(2) << '\n';
    out.close();
    if (!out) throw Error(ErrorCode::kIo, "failed writing manifest.json");
  });
  return summary;
}

StatsReport RunStats(const StatsInputs& inputs) {
  return Stage("stats", [&] {
    std::optional<StatsReport> report;
    auto merge = [&](StatsReport part) {
      if (report) {
        report->Merge(part);
      } else {
        report = std::move(part);
      }
    };
    if (!inputs.seed_corpus.empty()) {
      std::ifstream in = OpenInput(inputs.seed_corpus, "seed corpus");
      const SeedCorpus corpus = ParseSeedCorpus(in);
      const AccumulateResult result =
          AccumulateCounts(corpus.pairs, LoadLayout(inputs.layout));
      merge(StatsReport::FromCounts(result.counts));
    }
    if (!inputs.model.empty()) {
      std::ifstream in = OpenInput(inputs.model, "model");
      merge(StatsReport::FromCounts(LoadModel(in).counts()));
    }
    if (!inputs.edits.empty()) {
      std::ifstream in = OpenInput(inputs.edits, "edit log");
      StatsReport part;
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty() || line.starts_with("doc\t")) continue;
        part.AddEdit(EditRecord::FromTsv(line));
      }
      merge(std::move(part));
    }
    if (!inputs.original.empty() || !inputs.corrupted.empty()) {
      const std::vector<Tokens> original = ReadDocuments(inputs.original, "original corpus");
      const std::vector<Tokens> corrupted = ReadDocuments(inputs.corrupted, "corrupted corpus");
      if (original.size() != corrupted.size()) {
        throw Error(ErrorCode::kAlignmentViolation,
                    fmt::format("{} original documents but {} corrupted documents",
                                original.size(), corrupted.size()));
      }
      StatsReport part(report ? report->alphabet : Alphabet::Lowercase());
      for (std::size_t d = 0; d < original.size(); ++d) {
        part.words.AddDocument(original[d], corrupted[d]);
      }
      merge(std::move(part));
    }
    if (!report) {
      throw Error(ErrorCode::kInvalidArgument,
                  "give a seed corpus, a model, an edit log or an original/corrupted pair");
    }
    if (!inputs.output_dir.empty()) ExportTables(*report, inputs.output_dir);
    return *report;
  });
}

double RunBleu(const fs::path& references, const fs::path& candidates, int max_n) {
  return Stage("bleu", [&] {
    return CorpusBleu(ReadDocuments(references, "references"),
                      ReadDocuments(candidates, "candidates"), max_n);
  });
}

}  // namespace typogen

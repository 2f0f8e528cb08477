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

#ifndef TYPOGEN_NOISE_MODEL_H_
#define TYPOGEN_NOISE_MODEL_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "typogen/alphabet.h"
#include "typogen/category.h"
#include "typogen/typo_alignment.h"

namespace typogen {

// Exact non-negative ratio of integers. A zero denominator stands for an
// undefined ratio and evaluates to 0 (no evidence, no error).
struct Fraction {
  int64_t numerator = 0;
  int64_t denominator = 1;

  double value() const {
    return denominator == 0 ? 0.0
                            : static_cast<double>(numerator) /
                                  static_cast<double>(denominator);
  }
  // Compares values, not representations.
  bool operator==(const Fraction& other) const;
};

// Character and within-word bigram counts of a text. Bigrams are pairs of
// adjacent alphabet bytes, so whitespace and punctuation break them.
class CharDistribution {
 public:
  CharDistribution() : CharDistribution(Alphabet::Lowercase()) {}
  explicit CharDistribution(Alphabet alphabet);

  void AddText(std::string_view text);
  void Merge(const CharDistribution& other);

  const Alphabet& alphabet() const { return alphabet_; }
  uint64_t Freq(char c) const;
  uint64_t BigramFreq(char c1, char c2) const;
  uint64_t total() const;
  uint64_t total_bigrams() const;
  // Relative frequency; 0 for an empty distribution.
  double Relative(char c) const;

  const std::vector<uint64_t>& freq() const { return freq_; }
  const std::vector<uint64_t>& bigram_freq() const { return bigram_; }
  std::vector<uint64_t>& mutable_freq() { return freq_; }
  std::vector<uint64_t>& mutable_bigram_freq() { return bigram_; }

  static CharDistribution FromCounts(const ErrorCounts& counts);

  bool operator==(const CharDistribution&) const = default;

 private:
  Alphabet alphabet_;
  std::vector<uint64_t> freq_;
  std::vector<uint64_t> bigram_;
};

enum class FrequencySource { kSeed, kRebased };

// Per-category weights applied to the induced event probabilities.
struct Coefficients {
  std::array<double, kNumCategories> weights = {1.0, 1.0, 1.0, 1.0, 1.0};

  static Coefficients Uniform(double w) { return {{w, w, w, w, w}}; }
  double operator[](ErrorCategory c) const { return weights[CategoryIndex(c)]; }
  double& operator[](ErrorCategory c) { return weights[CategoryIndex(c)]; }
  Coefficients Scaled(double factor) const;

  bool operator==(const Coefficients&) const = default;
};

// Dense double tables over alphabet indices used for sampling. Pair tables
// are cumulative distributions indexed [conditioning * size + candidate].
struct ProbabilityTables {
  int size = 0;
  std::vector<double> substitution;
  std::vector<double> insertion_before;
  std::vector<double> insertion_after;
  std::vector<double> replication;
  std::vector<double> deletion;
  std::vector<double> transposition;  // [first * size + second]
  std::vector<double> substitution_cdf;
  std::vector<double> insertion_before_cdf;
  std::vector<double> insertion_after_cdf;
};

// Induced noise model. It keeps the integer evidence (seed error counts and,
// once rebased, the target character distribution) and derives every
// probability from it, so all probabilities are exact fractions.
//
// Seed model:     P(k | c)    = f_k(c) / f(c)
// Rebased model:  P(k | c)    = f_k(c) / (N_seed * f_target(c) / N_target)
// and the same with bigram counts for transposition. The rebased denominator
// is the number of times `c` would occur in the seed if the seed had the
// target's character distribution, which keeps the expected number of
// k-errors per typed character unchanged.
class NoiseModel {
 public:
  NoiseModel() : NoiseModel(ErrorCounts()) {}

  // Builds the model from counts. Warnings (empty evidence, clamped
  // probabilities) are appended to `warnings` when given.
  static NoiseModel Induce(const ErrorCounts& counts,
                           std::vector<std::string>* warnings = nullptr);

  const Alphabet& alphabet() const { return counts_.alphabet(); }
  const ErrorCounts& counts() const { return counts_; }
  FrequencySource source() const {
    return target_ ? FrequencySource::kRebased : FrequencySource::kSeed;
  }
  const std::optional<CharDistribution>& target() const { return target_; }

  Fraction Substitution(char c) const;
  // P_substitution(replacement | c)
  Fraction SubstitutionPair(char replacement, char c) const;
  Fraction Insertion(char c, InsertionSide side) const;
  // P_insertion(inserted | c) for the given side.
  Fraction InsertionPair(char inserted, char c, InsertionSide side) const;
  Fraction Replication(char c) const;
  Fraction Deletion(char c) const;
  Fraction Transposition(char c1, char c2) const;

  // Event probability before clamping; a rebased model can exceed 1 for
  // contexts much rarer in the target than in the seed. `next` is used for
  // transposition and `side` for insertion.
  Fraction RawEvent(ErrorCategory category, char c, char next = 0,
                    InsertionSide side = InsertionSide::kBefore) const;

  const ProbabilityTables& tables() const { return tables_; }

  bool operator==(const NoiseModel& other) const {
    return counts_ == other.counts_ && target_ == other.target_;
  }

 private:
  friend NoiseModel RebaseFrequencies(const NoiseModel&, const CharDistribution&,
                                       std::vector<std::string>*);
  friend NoiseModel LoadModel(std::istream&);

  explicit NoiseModel(ErrorCounts counts,
                      std::optional<CharDistribution> target = std::nullopt,
                      std::vector<std::string>* warnings = nullptr);

  Fraction EventFraction(uint64_t count, int index) const;
  Fraction BigramFraction(uint64_t count, int first, int second) const;
  void BuildTables(std::vector<std::string>* warnings);

  ErrorCounts counts_;
  std::optional<CharDistribution> target_;
  ProbabilityTables tables_;
};

// Moves the event denominators onto the target's character distribution.
// Conditional pair tables are unchanged. Throws kEmptyDistribution.
NoiseModel RebaseFrequencies(const NoiseModel& model,
                             const CharDistribution& target,
                             std::vector<std::string>* warnings = nullptr);

enum class ExpectationMode {
  // Sum of scaled event probabilities; linear in the coefficients.
  kFirstOrder,
  // Accounts for at most one category firing per character (tried in
  // uniformly random order) and for a transposition consuming the next
  // character. The consumption term is taken to first order, which leaves a
  // residual of order p_trans^2.
  kFirstHit,
};

// Expected number of error events per alphabet character of `target` when the
// generator runs with `coefficients`. Scaled probabilities are clamped to 1.
double ExpectedErrorRate(const NoiseModel& model, const CharDistribution& target,
                         const Coefficients& coefficients,
                         ExpectationMode mode = ExpectationMode::kFirstHit);

// Largest s such that no probability of s * mix exceeds 1 for a character or
// bigram that occurs in `target`. Infinite if nothing can fire.
double MaxUnclampedScale(const NoiseModel& model, const CharDistribution& target,
                         const Coefficients& mix = Coefficients::Uniform(1.0));

// Share of the unclamped first-order error mass that clamping removes, in
// [0, 1]; 0 when nothing is clamped.
double ClampedShare(const NoiseModel& model, const CharDistribution& target,
                    const Coefficients& coefficients);

struct CalibrationOptions {
  ExpectationMode mode = ExpectationMode::kFirstHit;
  // Relative category weights; the calibrated result is scale * mix.
  Coefficients mix = Coefficients::Uniform(1.0);
  // When false, rates that need any scaled probability above 1 are refused.
  // When true, the clamped expectation is solved instead and only rates
  // beyond what full saturation yields are refused.
  bool allow_clamping = false;
};

// Finds coefficients (a uniform scale of `options.mix`) whose expected error
// rate over `target` equals `rate` within 1e-9. Throws kInvalidArgument for a
// rate outside [0, 1) and RateUnreachableError carrying the largest reachable
// rate otherwise.
Coefficients Calibrate(const NoiseModel& model, const CharDistribution& target,
                       double rate, const CalibrationOptions& options = {});

inline constexpr std::string_view kModelFormat = "typogen-noise-model";
inline constexpr int kModelVersion = 1;

// JSON document with sorted keys: format/version header, alphabet, the
// integer seed counts, the optional target distribution and, for reading
// convenience, the derived probabilities (ignored by LoadModel).
void SaveModel(const NoiseModel& model, std::ostream& out);
// Throws kFormat on malformed input and kVersion on an unknown version.
NoiseModel LoadModel(std::istream& in);

}  // namespace typogen

#endif  // TYPOGEN_NOISE_MODEL_H_

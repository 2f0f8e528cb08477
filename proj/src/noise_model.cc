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

#include "typogen/noise_model.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "typogen/error.h"

namespace typogen {
namespace {

using Int128 = __int128;

Int128 Gcd(Int128 a, Int128 b) {
  while (b != 0) {
    Int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Reduces num/den; a zero denominator or numerator yields 0/1.
Fraction MakeFraction(Int128 num, Int128 den) {
  if (num == 0 || den == 0) return {0, 1};
  const Int128 g = Gcd(num, den);
  num /= g;
  den /= g;
  constexpr Int128 kMax = std::numeric_limits<int64_t>::max();
  if (num > kMax || den > kMax) {
    throw Error(ErrorCode::kInvalidArgument, "probability fraction overflows 64 bits");
  }
  return {static_cast<int64_t>(num), static_cast<int64_t>(den)};
}

Fraction ClampToOne(Fraction f) {
  if (f.denominator != 0 && f.numerator > f.denominator) return {1, 1};
  return f;
}

uint64_t Sum(const std::vector<uint64_t>& v) {
  return std::accumulate(v.begin(), v.end(), uint64_t{0});
}

// Re-expresses `source` over `alphabet`, dropping characters it lacks.
CharDistribution Project(const CharDistribution& source, const Alphabet& alphabet) {
  if (source.alphabet() == alphabet) return source;
  CharDistribution out(alphabet);
  const Alphabet& from = source.alphabet();
  const int n = from.size();
  const int m = alphabet.size();
  for (int i = 0; i < n; ++i) {
    const int ti = alphabet.IndexOf(from.at(i));
    if (ti < 0) continue;
    out.mutable_freq()[ti] += source.freq()[i];
    for (int j = 0; j < n; ++j) {
      const int tj = alphabet.IndexOf(from.at(j));
      if (tj < 0) continue;
      out.mutable_bigram_freq()[ti * m + tj] += source.bigram_freq()[i * n + j];
    }
  }
  return out;
}

void Cumulate(const std::vector<uint64_t>& pairs, int size,
              std::vector<double>& cdf) {
  cdf.assign(pairs.size(), 0.0);
  for (int c = 0; c < size; ++c) {
    const auto row = pairs.begin() + c * size;
    const uint64_t total = std::accumulate(row, row + size, uint64_t{0});
    if (total == 0) continue;
    uint64_t running = 0;
    for (int k = 0; k < size; ++k) {
      running += row[k];
      cdf[c * size + k] =
          static_cast<double>(running) / static_cast<double>(total);
    }
  }
}

}  // namespace

bool Fraction::operator==(const Fraction& other) const {
  const Int128 a = denominator == 0 ? 0 : numerator;
  const Int128 b = other.denominator == 0 ? 0 : other.numerator;
  const Int128 da = denominator == 0 ? 1 : denominator;
  const Int128 db = other.denominator == 0 ? 1 : other.denominator;
  return a * db == b * da;
}

CharDistribution::CharDistribution(Alphabet alphabet)
    : alphabet_(std::move(alphabet)),
      freq_(alphabet_.size(), 0),
      bigram_(static_cast<std::size_t>(alphabet_.size()) * alphabet_.size(), 0) {}

void CharDistribution::AddText(std::string_view text) {
  const int n = alphabet_.size();
  int prev = -1;
  for (char c : text) {
    const int idx = alphabet_.IndexOf(c);
    if (idx >= 0) {
      ++freq_[idx];
      if (prev >= 0) ++bigram_[prev * n + idx];
    }
    prev = idx;
  }
}

void CharDistribution::Merge(const CharDistribution& other) {
  if (!(alphabet_ == other.alphabet_)) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot merge distributions over different alphabets");
  }
  for (std::size_t i = 0; i < freq_.size(); ++i) freq_[i] += other.freq_[i];
  for (std::size_t i = 0; i < bigram_.size(); ++i) bigram_[i] += other.bigram_[i];
}

uint64_t CharDistribution::Freq(char c) const {
  const int i = alphabet_.IndexOf(c);
  return i < 0 ? 0 : freq_[i];
}

uint64_t CharDistribution::BigramFreq(char c1, char c2) const {
  const int i = alphabet_.IndexOf(c1);
  const int j = alphabet_.IndexOf(c2);
  return i < 0 || j < 0 ? 0 : bigram_[i * alphabet_.size() + j];
}

uint64_t CharDistribution::total() const { return Sum(freq_); }
uint64_t CharDistribution::total_bigrams() const { return Sum(bigram_); }

double CharDistribution::Relative(char c) const {
  const uint64_t n = total();
  return n == 0 ? 0.0 : static_cast<double>(Freq(c)) / static_cast<double>(n);
}

CharDistribution CharDistribution::FromCounts(const ErrorCounts& counts) {
  CharDistribution out(counts.alphabet());
  out.freq_ = counts.char_freq();
  out.bigram_ = counts.bigram_freq();
  return out;
}

Coefficients Coefficients::Scaled(double factor) const {
  Coefficients out = *this;
  for (double& w : out.weights) w *= factor;
  return out;
}

NoiseModel::NoiseModel(ErrorCounts counts, std::optional<CharDistribution> target,
                       std::vector<std::string>* warnings)
    : counts_(std::move(counts)), target_(std::move(target)) {
  if (target_) target_ = Project(*target_, counts_.alphabet());
  BuildTables(warnings);
}

NoiseModel NoiseModel::Induce(const ErrorCounts& counts,
                              std::vector<std::string>* warnings) {
  if (warnings != nullptr && counts.TotalEdits() == 0) {
    warnings->push_back("no edits in the counts; every event probability is 0");
  }
  ErrorCounts finished = counts;
  finished.Finish();
  return NoiseModel(std::move(finished), std::nullopt, warnings);
}

Fraction NoiseModel::EventFraction(uint64_t count, int index) const {
  if (!target_) return MakeFraction(count, counts_.char_freq()[index]);
  const Int128 seed_total = counts_.TotalChars();
  const Int128 target_total = target_->total();
  return MakeFraction(Int128{count} * target_total,
                      seed_total * Int128{target_->freq()[index]});
}

Fraction NoiseModel::BigramFraction(uint64_t count, int first, int second) const {
  const std::size_t slot =
      static_cast<std::size_t>(first) * alphabet().size() + second;
  if (!target_) return MakeFraction(count, counts_.bigram_freq()[slot]);
  const Int128 seed_total = counts_.TotalBigrams();
  const Int128 target_total = target_->total_bigrams();
  return MakeFraction(Int128{count} * target_total,
                      seed_total * Int128{target_->bigram_freq()[slot]});
}

Fraction NoiseModel::Substitution(char c) const {
  const int i = alphabet().IndexOf(c);
  if (i < 0) return {0, 1};
  return ClampToOne(EventFraction(counts_.SubstitutionTotal(c), i));
}

Fraction NoiseModel::SubstitutionPair(char replacement, char c) const {
  return MakeFraction(counts_.SubstitutionPair(replacement, c),
                      counts_.SubstitutionTotal(c));
}

Fraction NoiseModel::Insertion(char c, InsertionSide side) const {
  const int i = alphabet().IndexOf(c);
  if (i < 0) return {0, 1};
  return ClampToOne(EventFraction(counts_.InsertionSideTotal(c, side), i));
}

Fraction NoiseModel::InsertionPair(char inserted, char c, InsertionSide side) const {
  return MakeFraction(counts_.InsertionPair(inserted, c, side),
                      counts_.InsertionSideTotal(c, side));
}

Fraction NoiseModel::Replication(char c) const {
  const int i = alphabet().IndexOf(c);
  if (i < 0) return {0, 1};
  return ClampToOne(EventFraction(counts_.Replication(c), i));
}

Fraction NoiseModel::Deletion(char c) const {
  const int i = alphabet().IndexOf(c);
  if (i < 0) return {0, 1};
  return ClampToOne(EventFraction(counts_.Deletion(c), i));
}

Fraction NoiseModel::Transposition(char c1, char c2) const {
  const int i = alphabet().IndexOf(c1);
  const int j = alphabet().IndexOf(c2);
  if (i < 0 || j < 0) return {0, 1};
  return ClampToOne(BigramFraction(counts_.Transposition(c1, c2), i, j));
}

Fraction NoiseModel::RawEvent(ErrorCategory category, char c, char next,
                              InsertionSide side) const {
  const int i = alphabet().IndexOf(c);
  if (i < 0) return {0, 1};
  switch (category) {
    case ErrorCategory::kSubstitution:
      return EventFraction(counts_.SubstitutionTotal(c), i);
    case ErrorCategory::kInsertion:
      return EventFraction(counts_.InsertionSideTotal(c, side), i);
    case ErrorCategory::kReplication:
      return EventFraction(counts_.Replication(c), i);
    case ErrorCategory::kDeletion:
      return EventFraction(counts_.Deletion(c), i);
    case ErrorCategory::kTransposition: {
      const int j = alphabet().IndexOf(next);
      if (j < 0) return {0, 1};
      return BigramFraction(counts_.Transposition(c, next), i, j);
    }
  }
  return {0, 1};
}

void NoiseModel::BuildTables(std::vector<std::string>* warnings) {
  const Alphabet& a = alphabet();
  const int n = a.size();
  ProbabilityTables t;
  t.size = n;
  t.substitution.assign(n, 0.0);
  t.insertion_before.assign(n, 0.0);
  t.insertion_after.assign(n, 0.0);
  t.replication.assign(n, 0.0);
  t.deletion.assign(n, 0.0);
  t.transposition.assign(static_cast<std::size_t>(n) * n, 0.0);

  auto event = [&](std::string_view name, uint64_t count, int i) {
    const Fraction raw = EventFraction(count, i);
    if (raw.value() > 1.0) {
      if (warnings != nullptr) {
        warnings->push_back(fmt::format("P({} | {}) = {}/{} exceeds 1; clamped",
                                        name, a.at(i), raw.numerator,
                                        raw.denominator));
      }
      return 1.0;
    }
    return raw.value();
  };
  for (int i = 0; i < n; ++i) {
    const char c = a.at(i);
    t.substitution[i] = event("substitution", counts_.SubstitutionTotal(c), i);
    t.insertion_before[i] = event(
        "insertion before", counts_.InsertionSideTotal(c, InsertionSide::kBefore), i);
    t.insertion_after[i] = event(
        "insertion after", counts_.InsertionSideTotal(c, InsertionSide::kAfter), i);
    t.replication[i] = event("replication", counts_.Replication(c), i);
    t.deletion[i] = event("deletion", counts_.Deletion(c), i);
    for (int j = 0; j < n; ++j) {
      const Fraction raw = BigramFraction(counts_.Transposition(c, a.at(j)), i, j);
      double p = raw.value();
      if (p > 1.0) {
        if (warnings != nullptr) {
          warnings->push_back(fmt::format(
              "P(transposition | {}{}) = {}/{} exceeds 1; clamped", c, a.at(j),
              raw.numerator, raw.denominator));
        }
        p = 1.0;
      }
      t.transposition[i * n + j] = p;
    }
  }
  Cumulate(counts_.substitution_pairs(), n, t.substitution_cdf);
  Cumulate(counts_.insertion_before_pairs(), n, t.insertion_before_cdf);
  Cumulate(counts_.insertion_after_pairs(), n, t.insertion_after_cdf);
  tables_ = std::move(t);
}

NoiseModel RebaseFrequencies(const NoiseModel& model,
                             const CharDistribution& target,
                             std::vector<std::string>* warnings) {
  CharDistribution projected = Project(target, model.alphabet());
  if (projected.total() == 0) {
    throw Error(ErrorCode::kEmptyDistribution,
                "target distribution has no characters of the model alphabet");
  }
  return NoiseModel(model.counts(), std::move(projected), warnings);
}

namespace {

struct CharRates {
  // Probability that one of substitution, insertion, replication, deletion
  // fires, and the individual probabilities used for the race integral.
  double q_sub = 0, q_ins = 0, q_rep = 0, q_del = 0;
  double base = 0;
};

CharRates RatesFor(const ProbabilityTables& t, int i, const Coefficients& w) {
  auto q = [](double weight, double p) { return std::min(1.0, weight * p); };
  CharRates r;
  r.q_sub = q(w[ErrorCategory::kSubstitution], t.substitution[i]);
  const double q_before = q(w[ErrorCategory::kInsertion], t.insertion_before[i]);
  const double q_after = q(w[ErrorCategory::kInsertion], t.insertion_after[i]);
  r.q_ins = 1.0 - (1.0 - q_before) * (1.0 - q_after);
  r.q_rep = q(w[ErrorCategory::kReplication], t.replication[i]);
  r.q_del = q(w[ErrorCategory::kDeletion], t.deletion[i]);
  r.base = 1.0 - (1.0 - r.q_sub) * (1.0 - r.q_ins) * (1.0 - r.q_rep) *
                     (1.0 - r.q_del);
  return r;
}

// Integral over s in [0, 1] of prod_k (1 - q_k s).
double RaceIntegral(const CharRates& r) {
  std::array<double, 5> poly = {1.0, 0, 0, 0, 0};
  int degree = 0;
  for (double q : {r.q_sub, r.q_ins, r.q_rep, r.q_del}) {
    for (int d = degree + 1; d >= 1; --d) poly[d] -= q * poly[d - 1];
    ++degree;
  }
  double integral = 0;
  for (int d = 0; d <= degree; ++d) integral += poly[d] / (d + 1);
  return integral;
}

}  // namespace

double ExpectedErrorRate(const NoiseModel& model, const CharDistribution& target,
                         const Coefficients& coefficients, ExpectationMode mode) {
  const CharDistribution dist = Project(target, model.alphabet());
  const uint64_t total = dist.total();
  if (total == 0) {
    throw Error(ErrorCode::kEmptyDistribution, "target distribution is empty");
  }
  const ProbabilityTables& t = model.tables();
  const int n = t.size;
  const double w_trans = coefficients[ErrorCategory::kTransposition];
  auto q_trans = [&](int i, int j) {
    return std::min(1.0, w_trans * t.transposition[i * n + j]);
  };

  double expected = 0.0;
  if (mode == ExpectationMode::kFirstOrder) {
    auto q = [](double weight, double p) { return std::min(1.0, weight * p); };
    for (int i = 0; i < n; ++i) {
      const double f = static_cast<double>(dist.freq()[i]);
      if (f == 0) continue;
      expected += f * (q(coefficients[ErrorCategory::kSubstitution], t.substitution[i]) +
                       q(coefficients[ErrorCategory::kInsertion], t.insertion_before[i]) +
                       q(coefficients[ErrorCategory::kInsertion], t.insertion_after[i]) +
                       q(coefficients[ErrorCategory::kReplication], t.replication[i]) +
                       q(coefficients[ErrorCategory::kDeletion], t.deletion[i]));
      for (int j = 0; j < n; ++j) {
        expected += static_cast<double>(dist.bigram_freq()[i * n + j]) * q_trans(i, j);
      }
    }
    return expected / static_cast<double>(total);
  }

  std::vector<CharRates> rates(n);
  std::vector<double> mean_fire(n, 0.0);  // per occurrence, over its contexts
  for (int i = 0; i < n; ++i) {
    const uint64_t f = dist.freq()[i];
    if (f == 0) continue;
    rates[i] = RatesFor(t, i, coefficients);
    uint64_t followed = 0;
    double fired = 0.0;
    for (int j = 0; j < n; ++j) {
      const uint64_t b = dist.bigram_freq()[i * n + j];
      if (b == 0) continue;
      followed += b;
      fired += static_cast<double>(b) *
               (1.0 - (1.0 - rates[i].base) * (1.0 - q_trans(i, j)));
    }
    const uint64_t final_count = f > followed ? f - followed : 0;
    fired += static_cast<double>(final_count) * rates[i].base;
    mean_fire[i] = fired / static_cast<double>(f);
    expected += fired;
  }
  // A transposition consumes the following character, which then cannot
  // receive an error of its own.
  for (int i = 0; i < n; ++i) {
    if (dist.freq()[i] == 0) continue;
    const double race = RaceIntegral(rates[i]);
    for (int j = 0; j < n; ++j) {
      const uint64_t b = dist.bigram_freq()[i * n + j];
      if (b == 0) continue;
      const double wins = q_trans(i, j) * race;
      expected -= static_cast<double>(b) * wins * mean_fire[j];
    }
  }
  return expected / static_cast<double>(total);
}

double MaxUnclampedScale(const NoiseModel& model, const CharDistribution& target,
                         const Coefficients& mix) {
  const CharDistribution dist = Project(target, model.alphabet());
  const ProbabilityTables& t = model.tables();
  const int n = t.size;
  double limit = std::numeric_limits<double>::infinity();
  auto bound = [&](double weight, double p) {
    if (weight * p > 0) limit = std::min(limit, 1.0 / (weight * p));
  };
  for (int i = 0; i < n; ++i) {
    if (dist.freq()[i] == 0) continue;
    bound(mix[ErrorCategory::kSubstitution], t.substitution[i]);
    bound(mix[ErrorCategory::kInsertion], t.insertion_before[i]);
    bound(mix[ErrorCategory::kInsertion], t.insertion_after[i]);
    bound(mix[ErrorCategory::kReplication], t.replication[i]);
    bound(mix[ErrorCategory::kDeletion], t.deletion[i]);
    for (int j = 0; j < n; ++j) {
      if (dist.bigram_freq()[i * n + j] == 0) continue;
      bound(mix[ErrorCategory::kTransposition], t.transposition[i * n + j]);
    }
  }
  return limit;
}

namespace {

// Smallest scale at which every firing probability of a present context has
// reached 1.
double SaturationScale(const NoiseModel& model, const CharDistribution& target,
                       const Coefficients& mix) {
  const CharDistribution dist = Project(target, model.alphabet());
  const ProbabilityTables& t = model.tables();
  const int n = t.size;
  double scale = 0.0;
  auto bound = [&](double weight, double p) {
    if (weight * p > 0) scale = std::max(scale, 1.0 / (weight * p));
  };
  for (int i = 0; i < n; ++i) {
    if (dist.freq()[i] == 0) continue;
    bound(mix[ErrorCategory::kSubstitution], t.substitution[i]);
    bound(mix[ErrorCategory::kInsertion], t.insertion_before[i]);
    bound(mix[ErrorCategory::kInsertion], t.insertion_after[i]);
    bound(mix[ErrorCategory::kReplication], t.replication[i]);
    bound(mix[ErrorCategory::kDeletion], t.deletion[i]);
    for (int j = 0; j < n; ++j) {
      if (dist.bigram_freq()[i * n + j] == 0) continue;
      bound(mix[ErrorCategory::kTransposition], t.transposition[i * n + j]);
    }
  }
  return scale;
}

}  // namespace

double ClampedShare(const NoiseModel& model, const CharDistribution& target,
                    const Coefficients& coefficients) {
  const CharDistribution dist = Project(target, model.alphabet());
  const Alphabet& a = model.alphabet();
  const int n = a.size();
  double raw = 0.0;
  double kept = 0.0;
  auto add = [&](uint64_t count, ErrorCategory k, char c, char next = 0,
                 InsertionSide side = InsertionSide::kBefore) {
    if (count == 0) return;
    const double p = coefficients[k] * model.RawEvent(k, c, next, side).value();
    raw += static_cast<double>(count) * p;
    kept += static_cast<double>(count) * std::min(1.0, p);
  };
  for (int i = 0; i < n; ++i) {
    const uint64_t f = dist.freq()[i];
    const char c = a.at(i);
    add(f, ErrorCategory::kSubstitution, c);
    add(f, ErrorCategory::kInsertion, c, 0, InsertionSide::kBefore);
    add(f, ErrorCategory::kInsertion, c, 0, InsertionSide::kAfter);
    add(f, ErrorCategory::kReplication, c);
    add(f, ErrorCategory::kDeletion, c);
    for (int j = 0; j < n; ++j) {
      add(dist.bigram_freq()[i * n + j], ErrorCategory::kTransposition, c, a.at(j));
    }
  }
  return raw == 0.0 ? 0.0 : (raw - kept) / raw;
}

Coefficients Calibrate(const NoiseModel& model, const CharDistribution& target,
                       double rate, const CalibrationOptions& options) {
  if (!(rate >= 0.0 && rate < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("error rate {} is outside [0, 1)", rate));
  }
  for (double w : options.mix.weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::kInvalidArgument, "category mix weights must be finite and >= 0");
    }
  }
  if (Project(target, model.alphabet()).total() == 0) {
    throw Error(ErrorCode::kEmptyDistribution, "target distribution is empty");
  }
  if (rate == 0.0) return Coefficients::Uniform(0.0);

  const double unclamped_max = MaxUnclampedScale(model, target, options.mix);
  if (!std::isfinite(unclamped_max)) throw RateUnreachableError(rate, 0.0);
  // Beyond the saturation scale every probability that can fire is 1.
  const double s_max = options.allow_clamping
                           ? SaturationScale(model, target, options.mix)
                           : unclamped_max;
  auto rate_at = [&](double s) {
    return ExpectedErrorRate(model, target, options.mix.Scaled(s), options.mode);
  };
  const double max_rate = rate_at(s_max);
  if (rate > max_rate) {
    throw RateUnreachableError(rate, max_rate, options.allow_clamping);
  }

  if (options.mode == ExpectationMode::kFirstOrder && rate <= rate_at(unclamped_max)) {
    // Linear below the clamp: rate(s) = s * rate(s_max) / s_max.
    return options.mix.Scaled(rate * unclamped_max / rate_at(unclamped_max));
  }
  double lo = 0.0;
  double hi = s_max;
  for (int iter = 0; iter < 200 && hi - lo > 1e-15 * s_max; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (rate_at(mid) < rate) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return options.mix.Scaled(0.5 * (lo + hi));
}

namespace {

using nlohmann::json;

std::string Key(char c) { return std::string(1, c); }

json SparseSingles(const Alphabet& a, const std::vector<uint64_t>& table) {
  json out = json::array();
  for (int i = 0; i < a.size(); ++i) {
    if (table[i] != 0) out.push_back(json::array({Key(a.at(i)), table[i]}));
  }
  return out;
}

json SparsePairs(const Alphabet& a, const std::vector<uint64_t>& table) {
  json out = json::array();
  const int n = a.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const uint64_t v = table[i * n + j];
      if (v != 0) out.push_back(json::array({Key(a.at(i)), Key(a.at(j)), v}));
    }
  }
  return out;
}

Error FormatError(const std::string& what) {
  return Error(ErrorCode::kFormat, "malformed model: " + what);
}

int CharIndex(const Alphabet& a, const json& value) {
  if (!value.is_string()) throw FormatError("character entry is not a string");
  const auto& s = value.get_ref<const std::string&>();
  if (s.size() != 1 || !a.Contains(s[0])) {
    throw FormatError("character '" + s + "' is not in the alphabet");
  }
  return a.IndexOf(s[0]);
}

uint64_t CountOf(const json& value) {
  if (!value.is_number_unsigned()) throw FormatError("count is not a non-negative integer");
  return value.get<uint64_t>();
}

void ReadSingles(const Alphabet& a, const json& entries, std::vector<uint64_t>& out,
                 std::string_view name) {
  if (!entries.is_array()) throw FormatError(fmt::format("'{}' is not an array", name));
  for (const json& e : entries) {
    if (!e.is_array() || e.size() != 2) {
      throw FormatError(fmt::format("'{}' entry is not [char, count]", name));
    }
    const int i = CharIndex(a, e[0]);
    if (out[i] != 0) throw FormatError(fmt::format("duplicate '{}' entry", name));
    out[i] = CountOf(e[1]);
  }
}

void ReadPairs(const Alphabet& a, const json& entries, std::vector<uint64_t>& out,
               std::string_view name) {
  if (!entries.is_array()) throw FormatError(fmt::format("'{}' is not an array", name));
  const int n = a.size();
  for (const json& e : entries) {
    if (!e.is_array() || e.size() != 3) {
      throw FormatError(fmt::format("'{}' entry is not [char, char, count]", name));
    }
    const std::size_t slot =
        static_cast<std::size_t>(CharIndex(a, e[0])) * n + CharIndex(a, e[1]);
    if (out[slot] != 0) throw FormatError(fmt::format("duplicate '{}' entry", name));
    out[slot] = CountOf(e[2]);
  }
}

const json& Field(const json& object, const char* name) {
  auto it = object.find(name);
  if (it == object.end()) throw FormatError(fmt::format("missing '{}'", name));
  return *it;
}

}  // namespace

void SaveModel(const NoiseModel& model, std::ostream& out) {
  const Alphabet& a = model.alphabet();
  const ErrorCounts& c = model.counts();
  json doc;
  doc["format"] = kModelFormat;
  doc["version"] = kModelVersion;
  doc["alphabet"] = a.chars();
  doc["source"] = model.source() == FrequencySource::kSeed ? "seed" : "rebased";
  doc["counts"] = {
      {"char", SparseSingles(a, c.char_freq())},
      {"bigram", SparsePairs(a, c.bigram_freq())},
      {"substitution", SparsePairs(a, c.substitution_pairs())},
      {"insertion_before", SparsePairs(a, c.insertion_before_pairs())},
      {"insertion_after", SparsePairs(a, c.insertion_after_pairs())},
      {"replication", SparseSingles(a, c.replications())},
      {"deletion", SparseSingles(a, c.deletions())},
      {"transposition", SparsePairs(a, c.transpositions())},
  };
  if (model.target()) {
    doc["target"] = {{"char", SparseSingles(a, model.target()->freq())},
                     {"bigram", SparsePairs(a, model.target()->bigram_freq())}};
  } else {
    doc["target"] = nullptr;
  }
  const ProbabilityTables& t = model.tables();
  json probs = json::object();
  auto singles = [&](const char* name, const std::vector<double>& table) {
    json m = json::object();
    for (int i = 0; i < a.size(); ++i) {
      if (table[i] != 0) m[Key(a.at(i))] = table[i];
    }
    probs[name] = std::move(m);
  };
  singles("substitution", t.substitution);
  singles("insertion_before", t.insertion_before);
  singles("insertion_after", t.insertion_after);
  singles("replication", t.replication);
  singles("deletion", t.deletion);
  json trans = json::object();
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      const double p = t.transposition[i * a.size() + j];
      if (p != 0) trans[Key(a.at(i)) + Key(a.at(j))] = p;
    }
  }
  probs["transposition"] = std::move(trans);
  doc["probabilities"] = std::move(probs);
  out << doc.dump(1) << '\n';
}

NoiseModel LoadModel(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
  if (!doc.is_object()) throw FormatError("top level is not an object");
  const json& format = Field(doc, "format");
  if (!format.is_string() || format.get<std::string>() != kModelFormat) {
    throw FormatError("unexpected format tag");
  }
  const json& version = Field(doc, "version");
  if (!version.is_number_integer()) throw FormatError("version is not an integer");
  if (version.get<int64_t>() != kModelVersion) {
    throw Error(ErrorCode::kVersion,
                fmt::format("model version {} is not supported (expected {})",
                            version.get<int64_t>(), kModelVersion));
  }
  const json& alphabet_json = Field(doc, "alphabet");
  if (!alphabet_json.is_string()) throw FormatError("alphabet is not a string");
  Alphabet alphabet;
  try {
    alphabet = Alphabet(alphabet_json.get<std::string>());
  } catch (const Error& e) {
    throw FormatError(e.what());
  }

  const json& counts_json = Field(doc, "counts");
  if (!counts_json.is_object()) throw FormatError("counts is not an object");
  ErrorCounts counts(alphabet);
  ReadSingles(alphabet, Field(counts_json, "char"), counts.mutable_char_freq(), "char");
  ReadPairs(alphabet, Field(counts_json, "bigram"), counts.mutable_bigram_freq(), "bigram");
  ReadPairs(alphabet, Field(counts_json, "substitution"),
            counts.mutable_substitution_pairs(), "substitution");
  ReadPairs(alphabet, Field(counts_json, "insertion_before"),
            counts.mutable_insertion_before_pairs(), "insertion_before");
  ReadPairs(alphabet, Field(counts_json, "insertion_after"),
            counts.mutable_insertion_after_pairs(), "insertion_after");
  ReadSingles(alphabet, Field(counts_json, "replication"),
              counts.mutable_replications(), "replication");
  ReadSingles(alphabet, Field(counts_json, "deletion"), counts.mutable_deletions(),
              "deletion");
  ReadPairs(alphabet, Field(counts_json, "transposition"),
            counts.mutable_transpositions(), "transposition");
  counts.Finish();

  std::optional<CharDistribution> target;
  const json& target_json = Field(doc, "target");
  if (!target_json.is_null()) {
    if (!target_json.is_object()) throw FormatError("target is not an object");
    CharDistribution dist(alphabet);
    ReadSingles(alphabet, Field(target_json, "char"), dist.mutable_freq(), "target char");
    ReadPairs(alphabet, Field(target_json, "bigram"), dist.mutable_bigram_freq(),
              "target bigram");
    if (dist.total() == 0) throw FormatError("target distribution is empty");
    target = std::move(dist);
  }
  return NoiseModel(std::move(counts), std::move(target));
}

}  // namespace typogen

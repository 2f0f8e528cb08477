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

#ifndef TYPOGEN_RANDOM_H_
#define TYPOGEN_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace typogen {

// SplitMix64 finalizer.
uint64_t Mix64(uint64_t x);

// FNV-1a over the bytes of `text`.
uint64_t HashBytes(std::string_view text);

// Deterministic random stream. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; the conversions below are spelled out
// here so results do not depend on a particular standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(Mix64(seed)) {}

  // Independent stream for (seed, stream id); used to give every document
  // (or seed pair) its own reproducible stream.
  static Rng ForStream(uint64_t seed, uint64_t stream) {
    return Rng(Mix64(seed) ^ Mix64(stream + 0x632be59bd9b4e019ULL));
  }

  uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool Bernoulli(double p) { return Uniform() < p; }

  // Uniform in [0, n); n must be positive.
  uint64_t Below(uint64_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace typogen

#endif  // TYPOGEN_RANDOM_H_

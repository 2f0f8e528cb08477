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

#ifndef TYPOGEN_DATASET_EMITTER_H_
#define TYPOGEN_DATASET_EMITTER_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "typogen/error_generator.h"

namespace typogen {

struct LabeledToken {
  std::string surface;  // never empty
  std::string original;
  bool label = false;   // surface != original

  bool operator==(const LabeledToken&) const = default;
};

struct LabeledDocument {
  std::vector<LabeledToken> tokens;

  bool operator==(const LabeledDocument&) const = default;
};

// Pairs every original token with its final form. Empty final tokens become
// `placeholder`. Throws kAlignmentViolation when the counts differ.
LabeledDocument Emit(const Tokens& original, const Tokens& final_tokens,
                     std::string_view placeholder = kDefaultPlaceholder);

inline constexpr std::string_view kDatasetSchema = "typogen.labeled-dataset";
inline constexpr int kDatasetVersion = 1;

// One compact JSON object per document with the parallel arrays "labels"
// (0/1), "originals" and "surfaces".
std::string SerializeRecord(const LabeledDocument& document);
// Throws kFormat naming `doc_index` for malformed records, including arrays
// of unequal length, empty surfaces and labels that contradict the tokens.
LabeledDocument ParseRecord(std::string_view line, std::size_t doc_index);

// Line-delimited dataset: a header line {"schema", "version"} followed by
// one record per document.
class DatasetWriter {
 public:
  explicit DatasetWriter(std::ostream& out);
  void Write(const LabeledDocument& document);
  std::size_t written() const { return written_; }

 private:
  std::ostream& out_;
  std::size_t written_ = 0;
};

class DatasetReader {
 public:
  // Reads the header. Throws kFormat without one and kVersion for an
  // unsupported version.
  explicit DatasetReader(std::istream& in);
  // False at end of stream.
  bool Next(LabeledDocument& document);

 private:
  std::istream& in_;
  std::size_t index_ = 0;
};

}  // namespace typogen

#endif  // TYPOGEN_DATASET_EMITTER_H_

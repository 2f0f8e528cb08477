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

#include "typogen/dataset_emitter.h"

#include <istream>
#include <ostream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "typogen/error.h"

namespace typogen {
namespace {

using nlohmann::json;

std::string Dump(const json& value) {
  try {
    return value.dump();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string("cannot encode record: ") + e.what());
  }
}

}  // namespace

LabeledDocument Emit(const Tokens& original, const Tokens& final_tokens,
                     std::string_view placeholder) {
  if (original.size() != final_tokens.size()) {
    throw Error(ErrorCode::kAlignmentViolation,
                fmt::format("{} original tokens but {} final tokens",
                            original.size(), final_tokens.size()));
  }
  LabeledDocument doc;
  doc.tokens.reserve(original.size());
  for (std::size_t i = 0; i < original.size(); ++i) {
    LabeledToken token;
    token.surface =
        final_tokens[i].empty() ? std::string(placeholder) : final_tokens[i];
    token.original = original[i];
    token.label = token.surface != token.original;
    doc.tokens.push_back(std::move(token));
  }
  return doc;
}

std::string SerializeRecord(const LabeledDocument& document) {
  json labels = json::array();
  json originals = json::array();
  json surfaces = json::array();
  for (const LabeledToken& t : document.tokens) {
    labels.push_back(t.label ? 1 : 0);
    originals.push_back(t.original);
    surfaces.push_back(t.surface);
  }
  json record = {{"labels", std::move(labels)},
                 {"originals", std::move(originals)},
                 {"surfaces", std::move(surfaces)}};
  return Dump(record);
}

LabeledDocument ParseRecord(std::string_view line, std::size_t doc_index) {
  auto fail = [&](std::string_view why) {
    return Error(ErrorCode::kFormat,
                 fmt::format("document {}: {}", doc_index, why));
  };
  json record;
  try {
    record = json::parse(line);
  } catch (const json::exception& e) {
    throw fail(e.what());
  }
  if (!record.is_object()) throw fail("record is not an object");
  for (const char* key : {"labels", "originals", "surfaces"}) {
    if (!record.contains(key) || !record[key].is_array()) {
      throw fail(fmt::format("missing array '{}'", key));
    }
  }
  if (record.size() != 3) throw fail("unexpected fields");
  const json& labels = record["labels"];
  const json& originals = record["originals"];
  const json& surfaces = record["surfaces"];
  if (labels.size() != originals.size() || labels.size() != surfaces.size()) {
    throw fail(fmt::format("array lengths differ ({} labels, {} originals, {} surfaces)",
                           labels.size(), originals.size(), surfaces.size()));
  }
  LabeledDocument doc;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!labels[i].is_number_integer() || !originals[i].is_string() ||
        !surfaces[i].is_string()) {
      throw fail(fmt::format("token {} has the wrong type", i));
    }
    const int64_t label = labels[i].get<int64_t>();
    if (label != 0 && label != 1) throw fail(fmt::format("token {} label is not 0/1", i));
    LabeledToken token{surfaces[i].get<std::string>(), originals[i].get<std::string>(),
                       label == 1};
    if (token.surface.empty()) throw fail(fmt::format("token {} surface is empty", i));
    if (token.label != (token.surface != token.original)) {
      throw fail(fmt::format("token {} label contradicts its surface", i));
    }
    doc.tokens.push_back(std::move(token));
  }
  return doc;
}

DatasetWriter::DatasetWriter(std::ostream& out) : out_(out) {
  out_ << Dump(json{{"schema", kDatasetSchema}, {"version", kDatasetVersion}}) << '\n';
}

void DatasetWriter::Write(const LabeledDocument& document) {
  out_ << SerializeRecord(document) << '\n';
  ++written_;
}

DatasetReader::DatasetReader(std::istream& in) : in_(in) {
  std::string line;
  if (!std::getline(in_, line)) {
    throw Error(ErrorCode::kFormat, "dataset has no header line");
  }
  json header;
  try {
    header = json::parse(line);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string("dataset header: ") + e.what());
  }
  if (!header.is_object() || header.value("schema", "") != kDatasetSchema ||
      !header.contains("version") || !header["version"].is_number_integer()) {
    throw Error(ErrorCode::kFormat, "dataset header is not a typogen dataset header");
  }
  if (header["version"].get<int64_t>() != kDatasetVersion) {
    throw Error(ErrorCode::kVersion,
                fmt::format("dataset version {} is not supported",
                            header["version"].get<int64_t>()));
  }
}

bool DatasetReader::Next(LabeledDocument& document) {
  std::string line;
  if (!std::getline(in_, line)) return false;
  document = ParseRecord(line, index_++);
  return true;
}

}  // namespace typogen

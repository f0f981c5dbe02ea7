// Copyright 2026 The Deontic Toolkit Authors.
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

// Annotation records and the corpus file format.

#ifndef DEONTIC_CORPUS_RECORD_H_
#define DEONTIC_CORPUS_RECORD_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "deontic/types.h"

namespace deontic::corpus {

enum class Split { kTrain = 0, kDev, kTest };
inline constexpr int kNumSplits = 3;

std::string_view SplitName(Split split);
std::optional<Split> ParseSplit(std::string_view name);

struct AnnotationRecord {
  std::string sentence_id;
  std::string contract_id;
  std::string agent;
  LabelSet labels;
  std::vector<TypedSpan> spans;  // token indices, inclusive
  std::optional<std::string> annotator_id;
  std::optional<Split> split;
  std::optional<std::string> text;
  std::optional<std::vector<std::string>> tokens;

  bool operator==(const AnnotationRecord &) const = default;

  // Lowercased trigger text of `span`, empty without tokens.
  std::string SpanText(const TypedSpan &span) const;
};

// Checks labels = {None} iff there are no spans, every span type is a
// label, spans lie within the tokens (when present) and spans of one type
// do not overlap. Throws Error(kValidation) naming the record.
void ValidateRecord(const AnnotationRecord &record);

// Optional fields are omitted when absent. Spans carry their text when the
// record has tokens.
nlohmann::ordered_json ToJson(const AnnotationRecord &record);
AnnotationRecord RecordFromJson(const nlohmann::json &j);

// Reads a corpus file. With `validate`, every record goes through
// ValidateRecord; errors name the line.
std::vector<AnnotationRecord> ReadCorpusFile(const std::filesystem::path &path,
                                             bool validate = true);
void WriteCorpusFile(const std::filesystem::path &path,
                     const std::vector<AnnotationRecord> &records);

// Declarative import of foreign annotation files.
//
// `fields` maps canonical field names to source field paths ("a.b" walks
// nested objects). Besides the canonical names, "tags" may name a BIOS tag
// list from which spans are derived. `labels` maps source label strings to
// type names before parsing.
struct ImportMapping {
  std::map<std::string, std::string> fields;
  std::map<std::string, std::string> labels;
};

ImportMapping ImportMappingFromJson(const nlohmann::json &j);

// Throws Error(kParse) naming the missing or malformed field.
AnnotationRecord ImportRecord(const nlohmann::json &source,
                              const ImportMapping &mapping);

}  // namespace deontic::corpus

#endif  // DEONTIC_CORPUS_RECORD_H_

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

#include "deontic/corpus/record.h"

#include <algorithm>

#include "deontic/error.h"
#include "deontic/io.h"
#include "deontic/rules/tags.h"
#include "deontic/text.h"

namespace deontic::corpus {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view SplitName(Split split) {
  switch (split) {
    case Split::kTrain: return "train";
    case Split::kDev: return "dev";
    case Split::kTest: return "test";
  }
  return "train";
}

std::optional<Split> ParseSplit(std::string_view name) {
  std::string lower = text::Lower(name);
  if (lower == "train") return Split::kTrain;
  if (lower == "dev" || lower == "validation" || lower == "val") {
    return Split::kDev;
  }
  if (lower == "test") return Split::kTest;
  return std::nullopt;
}

std::string AnnotationRecord::SpanText(const TypedSpan &span) const {
  if (!tokens || span.start < 0 ||
      span.end >= static_cast<int>(tokens->size()) || span.end < span.start) {
    return "";
  }
  std::vector<std::string> words(tokens->begin() + span.start,
                                 tokens->begin() + span.end + 1);
  return text::Lower(text::Join(words, " "));
}

void ValidateRecord(const AnnotationRecord &r) {
  auto fail = [&](const std::string &what) {
    throw Error(ErrorKind::kValidation, "corpus",
                "record '" + r.sentence_id + "' / '" + r.agent + "': " + what);
  };
  if (!IsValidLabelSet(r.labels)) fail("invalid label set");
  bool none = r.labels.contains(DeonticType::kNone);
  if (none != r.spans.empty()) {
    fail(none ? "None label with spans" : "typed labels without spans");
  }
  for (const TypedSpan &s : r.spans) {
    if (!r.labels.contains(s.type)) {
      fail("span type " + std::string(TypeName(s.type)) + " not in labels");
    }
    if (s.start < 0 || s.end < s.start ||
        (r.tokens && s.end >= static_cast<int>(r.tokens->size()))) {
      fail("span " + std::to_string(s.start) + ".." + std::to_string(s.end) +
           " out of bounds");
    }
  }
  std::vector<TypedSpan> sorted = r.spans;
  SortSpans(sorted);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (sorted[i].type == sorted[j].type && sorted[i].Overlaps(sorted[j])) {
        fail("overlapping " + std::string(TypeName(sorted[i].type)) +
             " spans");
      }
    }
  }
}

ordered_json ToJson(const AnnotationRecord &r) {
  ordered_json j;
  j["sentence_id"] = r.sentence_id;
  j["contract_id"] = r.contract_id;
  j["agent"] = r.agent;
  j["labels"] = LabelNames(r.labels);
  ordered_json spans = ordered_json::array();
  for (const TypedSpan &s : r.spans) {
    ordered_json sj;
    sj["type"] = TypeName(s.type);
    sj["start"] = s.start;
    sj["end"] = s.end;
    if (r.tokens) sj["text"] = r.SpanText(s);
    spans.push_back(std::move(sj));
  }
  j["spans"] = std::move(spans);
  if (r.annotator_id) j["annotator_id"] = *r.annotator_id;
  if (r.split) j["split"] = SplitName(*r.split);
  if (r.text) j["text"] = *r.text;
  if (r.tokens) j["tokens"] = *r.tokens;
  return j;
}

namespace {

LabelSet ParseLabels(const json &labels,
                     const std::map<std::string, std::string> *map) {
  LabelSet out;
  for (const json &l : labels) {
    std::string name = l.get<std::string>();
    if (map != nullptr) {
      auto it = map->find(name);
      if (it == map->end()) it = map->find(text::Lower(name));
      if (it != map->end()) name = it->second;
    }
    out.insert(ParseTypeOrThrow(name));
  }
  return out;
}

TypedSpan ParseSpan(const json &sj,
                    const std::map<std::string, std::string> *map) {
  std::string name = sj.at("type").get<std::string>();
  if (map != nullptr) {
    auto it = map->find(name);
    if (it == map->end()) it = map->find(text::Lower(name));
    if (it != map->end()) name = it->second;
  }
  return {ParseTypeOrThrow(name), sj.at("start").get<int>(),
          sj.at("end").get<int>()};
}

}  // namespace

AnnotationRecord RecordFromJson(const json &j) {
  AnnotationRecord r;
  try {
    r.sentence_id = j.at("sentence_id").get<std::string>();
    r.contract_id = j.value("contract_id", "");
    r.agent = j.at("agent").get<std::string>();
    r.labels = ParseLabels(j.at("labels"), nullptr);
    if (j.contains("spans")) {
      for (const json &sj : j["spans"]) r.spans.push_back(ParseSpan(sj, nullptr));
    }
    SortSpans(r.spans);
    if (j.contains("annotator_id") && !j["annotator_id"].is_null()) {
      r.annotator_id = j["annotator_id"].is_string()
                           ? j["annotator_id"].get<std::string>()
                           : j["annotator_id"].dump();
    }
    if (j.contains("split") && !j["split"].is_null()) {
      std::string name = j["split"].get<std::string>();
      r.split = ParseSplit(name);
      if (!r.split) {
        throw Error(ErrorKind::kParse, "corpus",
                    "unknown split '" + name + "'");
      }
    }
    if (j.contains("text") && !j["text"].is_null()) {
      r.text = j["text"].get<std::string>();
    }
    if (j.contains("tokens") && !j["tokens"].is_null()) {
      r.tokens = j["tokens"].get<std::vector<std::string>>();
    }
  } catch (const json::exception &e) {
    throw Error(ErrorKind::kParse, "corpus",
                std::string("annotation record: ") + e.what());
  } catch (const Error &e) {
    if (e.kind() == ErrorKind::kParse) throw;
    throw Error(ErrorKind::kParse, "corpus",
                std::string("annotation record: ") + e.what());
  }
  return r;
}

std::vector<AnnotationRecord> ReadCorpusFile(const std::filesystem::path &path,
                                             bool validate) {
  std::vector<AnnotationRecord> records;
  int line = 0;
  for (const json &j : io::ReadJsonLinesFile(path)) {
    ++line;
    try {
      records.push_back(RecordFromJson(j));
      if (validate) ValidateRecord(records.back());
    } catch (const Error &e) {
      throw Error(e.kind(), "corpus",
                  path.string() + ": record " + std::to_string(line) + ": " +
                      e.what());
    }
  }
  return records;
}

void WriteCorpusFile(const std::filesystem::path &path,
                     const std::vector<AnnotationRecord> &records) {
  std::vector<ordered_json> lines;
  lines.reserve(records.size());
  for (const AnnotationRecord &r : records) lines.push_back(ToJson(r));
  io::WriteJsonLinesFile(path, lines);
}

ImportMapping ImportMappingFromJson(const json &j) {
  ImportMapping m;
  if (!j.is_object()) {
    throw Error(ErrorKind::kConfig, "corpus", "import mapping must be an object");
  }
  if (j.contains("fields")) {
    m.fields = j["fields"].get<std::map<std::string, std::string>>();
  }
  if (j.contains("labels")) {
    for (const auto &[k, v] : j["labels"].items()) {
      m.labels[k] = v.get<std::string>();
      m.labels[text::Lower(k)] = v.get<std::string>();
    }
  }
  return m;
}

namespace {

const json *Lookup(const json &source, const std::string &path) {
  const json *cursor = &source;
  std::size_t b = 0;
  for (;;) {
    std::size_t dot = path.find('.', b);
    std::string key = path.substr(b, dot == std::string::npos ? dot : dot - b);
    if (!cursor->is_object() || !cursor->contains(key)) return nullptr;
    cursor = &(*cursor)[key];
    if (dot == std::string::npos) return cursor;
    b = dot + 1;
  }
}

}  // namespace

AnnotationRecord ImportRecord(const json &source, const ImportMapping &mapping) {
  auto field = [&](const std::string &canonical) -> const json * {
    auto it = mapping.fields.find(canonical);
    const std::string &path = it == mapping.fields.end() ? canonical : it->second;
    const json *value = Lookup(source, path);
    return value != nullptr && value->is_null() ? nullptr : value;
  };
  auto require = [&](const std::string &canonical) -> const json & {
    const json *value = field(canonical);
    if (value == nullptr) {
      auto it = mapping.fields.find(canonical);
      throw Error(ErrorKind::kParse, "corpus",
                  "import: missing field '" +
                      (it == mapping.fields.end() ? canonical : it->second) +
                      "' for " + canonical);
    }
    return *value;
  };
  auto as_string = [](const json &v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };

  AnnotationRecord r;
  try {
    r.sentence_id = as_string(require("sentence_id"));
    if (const json *v = field("contract_id")) r.contract_id = as_string(*v);
    r.agent = as_string(require("agent"));
    if (const json *v = field("text")) r.text = v->get<std::string>();
    if (const json *v = field("tokens")) {
      r.tokens = v->get<std::vector<std::string>>();
    }
    if (const json *v = field("annotator_id")) r.annotator_id = as_string(*v);
    if (const json *v = field("split")) {
      r.split = ParseSplit(v->get<std::string>());
    }
    if (const json *v = field("labels")) {
      json labels = v->is_array() ? *v : json::array({*v});
      r.labels = ParseLabels(labels, &mapping.labels);
    }
    if (const json *v = field("spans")) {
      for (const json &sj : *v) r.spans.push_back(ParseSpan(sj, &mapping.labels));
    } else if (const json *v = field("tags")) {
      std::vector<std::string> raw = v->get<std::vector<std::string>>();
      for (std::string &t : raw) {
        if (t.size() > 2 && t[1] == '-') {
          std::string suffix = t.substr(2);
          auto it = mapping.labels.find(suffix);
          if (it == mapping.labels.end()) it = mapping.labels.find(text::Lower(suffix));
          if (it != mapping.labels.end()) suffix = it->second;
          t = t.substr(0, 2) + std::string(TagSuffix(ParseTypeOrThrow(suffix)));
        }
      }
      r.spans = rules::TagsToSpans(rules::ParseTags(raw));
    }
  } catch (const json::exception &e) {
    throw Error(ErrorKind::kParse, "corpus", std::string("import: ") + e.what());
  } catch (const Error &e) {
    if (e.kind() == ErrorKind::kParse) throw;
    throw Error(ErrorKind::kParse, "corpus", std::string("import: ") + e.what());
  }
  if (r.labels.empty()) {
    for (const TypedSpan &s : r.spans) r.labels.insert(s.type);
    if (r.labels.empty()) r.labels.insert(DeonticType::kNone);
  }
  if (!r.tokens && r.text) r.tokens = text::SplitWords(*r.text);
  SortSpans(r.spans);
  return r;
}

}  // namespace deontic::corpus

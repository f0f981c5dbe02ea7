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

#include "deontic/types.h"

#include <algorithm>
#include <string>

#include "deontic/error.h"
#include "deontic/text.h"

namespace deontic {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIngest: return "ingest error";
    case ErrorKind::kParse: return "parse error";
    case ErrorKind::kStructural: return "structural error";
    case ErrorKind::kAlignment: return "alignment error";
    case ErrorKind::kConfig: return "configuration error";
    case ErrorKind::kValidation: return "validation error";
    case ErrorKind::kUsage: return "usage error";
    case ErrorKind::kUndefined: return "undefined";
    case ErrorKind::kDependency: return "dependency error";
    case ErrorKind::kInternal: return "internal error";
  }
  return "error";
}

Error::Error(ErrorKind kind, std::string module, const std::string &message)
    : std::runtime_error(std::string(ErrorKindName(kind)) + " [" + module +
                         "]: " + message),
      kind_(kind),
      module_(std::move(module)) {}

std::string_view TypeName(DeonticType type) {
  switch (type) {
    case DeonticType::kObl: return "Obl";
    case DeonticType::kEnt: return "Ent";
    case DeonticType::kPro: return "Pro";
    case DeonticType::kPer: return "Per";
    case DeonticType::kNobl: return "Nobl";
    case DeonticType::kNent: return "Nent";
    case DeonticType::kNone: return "None";
  }
  return "None";
}

std::string_view TagSuffix(DeonticType type) {
  switch (type) {
    case DeonticType::kObl: return "OBL";
    case DeonticType::kEnt: return "ENT";
    case DeonticType::kPro: return "PRO";
    case DeonticType::kPer: return "PER";
    case DeonticType::kNobl: return "NOBL";
    case DeonticType::kNent: return "NENT";
    case DeonticType::kNone: return "";
  }
  return "";
}

std::optional<DeonticType> ParseType(std::string_view raw) {
  std::string s = text::Lower(text::Trim(raw));
  std::erase_if(s, [](char c) { return c == ' ' || c == '-' || c == '_'; });
  if (s == "obl" || s == "obligation") return DeonticType::kObl;
  if (s == "ent" || s == "entitlement") return DeonticType::kEnt;
  if (s == "pro" || s == "prohibition") return DeonticType::kPro;
  if (s == "per" || s == "permission") return DeonticType::kPer;
  if (s == "nobl" || s == "noobligation") return DeonticType::kNobl;
  if (s == "nent" || s == "noentitlement") return DeonticType::kNent;
  if (s == "none") return DeonticType::kNone;
  return std::nullopt;
}

DeonticType ParseTypeOrThrow(std::string_view text) {
  auto type = ParseType(text);
  if (!type) {
    throw Error(ErrorKind::kValidation, "types",
                "unknown deontic type '" + std::string(text) + "'");
  }
  return *type;
}

bool IsValidLabelSet(const LabelSet &labels) {
  if (labels.empty()) return false;
  return !labels.contains(DeonticType::kNone) || labels.size() == 1;
}

std::vector<std::string> LabelNames(const LabelSet &labels) {
  std::vector<std::string> names;
  for (DeonticType t : labels) names.emplace_back(TypeName(t));
  return names;
}

void SortSpans(std::vector<TypedSpan> &spans) {
  std::sort(spans.begin(), spans.end(),
            [](const TypedSpan &a, const TypedSpan &b) {
              if (a.start != b.start) return a.start < b.start;
              if (a.end != b.end) return a.end < b.end;
              return a.type < b.type;
            });
}

}  // namespace deontic

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

#include "deontic/rules/tags.h"

#include <algorithm>

#include "deontic/error.h"

namespace deontic::rules {

namespace {

std::string SpanString(const TypedSpan &s) {
  return "(" + std::string(TypeName(s.type)) + "," + std::to_string(s.start) +
         "," + std::to_string(s.end) + ")";
}

}  // namespace

std::string TagString(const Tag &tag) {
  switch (tag.kind) {
    case TagKind::kO: return "O";
    case TagKind::kB: return "B-" + std::string(TagSuffix(tag.type));
    case TagKind::kI: return "I-" + std::string(TagSuffix(tag.type));
    case TagKind::kS: return "S-" + std::string(TagSuffix(tag.type));
  }
  return "O";
}

std::optional<Tag> ParseTag(std::string_view text) {
  if (text == "O") return Tag::O();
  if (text.size() < 3 || text[1] != '-') return std::nullopt;
  Tag tag;
  switch (text[0]) {
    case 'B': tag.kind = TagKind::kB; break;
    case 'I': tag.kind = TagKind::kI; break;
    case 'S': tag.kind = TagKind::kS; break;
    default: return std::nullopt;
  }
  std::string_view suffix = text.substr(2);
  for (DeonticType t : kSpanTypes) {
    if (suffix == TagSuffix(t)) {
      tag.type = t;
      return tag;
    }
  }
  return std::nullopt;
}

Tag ParseTagOrThrow(std::string_view text) {
  auto tag = ParseTag(text);
  if (!tag) {
    throw Error(ErrorKind::kValidation, "rules",
                "unknown tag '" + std::string(text) + "'");
  }
  return *tag;
}

std::vector<std::string> TagStrings(const TagSequence &tags) {
  std::vector<std::string> out;
  out.reserve(tags.size());
  for (const Tag &t : tags) out.push_back(TagString(t));
  return out;
}

TagSequence ParseTags(const std::vector<std::string> &tags) {
  TagSequence out;
  out.reserve(tags.size());
  for (const std::string &t : tags) out.push_back(ParseTagOrThrow(t));
  return out;
}

bool IsValidTagSequence(const TagSequence &tags) {
  for (std::size_t i = 0; i < tags.size(); ++i) {
    const Tag &t = tags[i];
    if ((t.kind == TagKind::kO) != (t.type == DeonticType::kNone)) {
      return false;
    }
    if (t.kind == TagKind::kI) {
      if (i == 0) return false;
      const Tag &p = tags[i - 1];
      if ((p.kind != TagKind::kB && p.kind != TagKind::kI) ||
          p.type != t.type) {
        return false;
      }
    }
    if (t.kind == TagKind::kB) {
      if (i + 1 >= tags.size()) return false;
      const Tag &n = tags[i + 1];
      if (n.kind != TagKind::kI || n.type != t.type) return false;
    }
  }
  return true;
}

TagSequence SpansToTags(const std::vector<TypedSpan> &spans, int n_tokens) {
  std::vector<TypedSpan> sorted = spans;
  SortSpans(sorted);
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const TypedSpan &s = sorted[k];
    if (s.type == DeonticType::kNone) {
      throw Error(ErrorKind::kValidation, "rules",
                  "span " + SpanString(s) + " has type None");
    }
    if (s.start < 0 || s.end < s.start || s.end >= n_tokens) {
      throw Error(ErrorKind::kValidation, "rules",
                  "span " + SpanString(s) + " outside " +
                      std::to_string(n_tokens) + " tokens");
    }
    if (k > 0 && sorted[k - 1].Overlaps(s)) {
      throw Error(ErrorKind::kValidation, "rules",
                  "overlapping spans " + SpanString(sorted[k - 1]) + " and " +
                      SpanString(s));
    }
  }
  TagSequence tags(static_cast<std::size_t>(std::max(n_tokens, 0)));
  for (const TypedSpan &s : sorted) {
    if (s.start == s.end) {
      tags[s.start] = {TagKind::kS, s.type};
      continue;
    }
    tags[s.start] = {TagKind::kB, s.type};
    for (int i = s.start + 1; i <= s.end; ++i) tags[i] = {TagKind::kI, s.type};
  }
  return tags;
}

std::vector<TypedSpan> TagsToSpans(const TagSequence &tags) {
  std::vector<TypedSpan> spans;
  const int n = static_cast<int>(tags.size());
  for (int i = 0; i < n; ++i) {
    const Tag &t = tags[i];
    if (t.kind == TagKind::kS) {
      spans.push_back({t.type, i, i});
    } else if (t.kind == TagKind::kB) {
      int j = i;
      while (j + 1 < n && tags[j + 1].kind == TagKind::kI &&
             tags[j + 1].type == t.type) {
        ++j;
      }
      spans.push_back({t.type, i, j});
      i = j;
    }
  }
  return spans;
}

TagSequence EraseTypes(const TagSequence &tags, DeonticType type) {
  TagSequence out = tags;
  for (Tag &t : out) {
    if (t.kind != TagKind::kO) t.type = type;
  }
  return out;
}

}  // namespace deontic::rules

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

// BIOS tag sequences.

#ifndef DEONTIC_RULES_TAGS_H_
#define DEONTIC_RULES_TAGS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deontic/types.h"

namespace deontic::rules {

enum class TagKind { kO, kB, kI, kS };

struct Tag {
  TagKind kind = TagKind::kO;
  DeonticType type = DeonticType::kNone;  // None iff kind is O

  static Tag O() { return {}; }
  bool operator==(const Tag &) const = default;
};

using TagSequence = std::vector<Tag>;

// "O", "B-OBL", "S-NENT", ...
std::string TagString(const Tag &tag);
std::optional<Tag> ParseTag(std::string_view text);
// Throws Error(kValidation) on unknown tags.
Tag ParseTagOrThrow(std::string_view text);

std::vector<std::string> TagStrings(const TagSequence &tags);
TagSequence ParseTags(const std::vector<std::string> &tags);

// Every I-X follows B-X or I-X, every B-X is followed by I-X, and O tags
// carry no type.
bool IsValidTagSequence(const TagSequence &tags);

// Throws Error(kValidation) for None-typed, out-of-bounds or overlapping
// spans; the message names the colliding spans.
TagSequence SpansToTags(const std::vector<TypedSpan> &spans, int n_tokens);

// Reads spans off a valid sequence, sorted by start.
std::vector<TypedSpan> TagsToSpans(const TagSequence &tags);

// Replaces every type with `type`, keeping B/I/S/O structure.
TagSequence EraseTypes(const TagSequence &tags,
                       DeonticType type = DeonticType::kObl);

}  // namespace deontic::rules

#endif  // DEONTIC_RULES_TAGS_H_

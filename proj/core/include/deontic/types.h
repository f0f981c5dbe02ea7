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

#ifndef DEONTIC_TYPES_H_
#define DEONTIC_TYPES_H_

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace deontic {

// Deontic types in their fixed enumeration order. The order matters: it is
// the tie-break for majority baselines and the column order of every report.
enum class DeonticType {
  kObl = 0,
  kEnt,
  kPro,
  kPer,
  kNobl,
  kNent,
  kNone,
};

inline constexpr int kNumDeonticTypes = 7;
inline constexpr int kNumSpanTypes = 6;  // everything except None

inline constexpr std::array<DeonticType, kNumDeonticTypes> kAllTypes = {
    DeonticType::kObl,  DeonticType::kEnt,  DeonticType::kPro,
    DeonticType::kPer,  DeonticType::kNobl, DeonticType::kNent,
    DeonticType::kNone};

inline constexpr std::array<DeonticType, kNumSpanTypes> kSpanTypes = {
    DeonticType::kObl, DeonticType::kEnt,  DeonticType::kPro,
    DeonticType::kPer, DeonticType::kNobl, DeonticType::kNent};

// "Obl", "Ent", ..., "None".
std::string_view TypeName(DeonticType type);

// "OBL", "ENT", ...; the BIOS tag suffix. None has no suffix.
std::string_view TagSuffix(DeonticType type);

// Accepts short names in any case ("obl", "OBL", "Obl") and the long
// taxonomy names ("obligation", "no obligation", "no-entitlement", ...).
std::optional<DeonticType> ParseType(std::string_view text);

// Throws Error(kValidation) on unknown names.
DeonticType ParseTypeOrThrow(std::string_view text);

using LabelSet = std::set<DeonticType>;

// None is exclusive: a valid label set is non-empty and, if it contains
// None, contains nothing else.
bool IsValidLabelSet(const LabelSet &labels);

std::vector<std::string> LabelNames(const LabelSet &labels);

// A typed token interval with inclusive bounds: (Obl, 1, 3) covers tokens
// 1, 2 and 3.
struct TypedSpan {
  DeonticType type = DeonticType::kObl;
  int start = 0;
  int end = 0;

  int length() const { return end - start + 1; }
  bool Overlaps(const TypedSpan &other) const {
    return start <= other.end && other.start <= end;
  }
  auto operator<=>(const TypedSpan &) const = default;
};

// Sorted by (start, end, type).
void SortSpans(std::vector<TypedSpan> &spans);

}  // namespace deontic

#endif  // DEONTIC_TYPES_H_

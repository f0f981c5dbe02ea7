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

// Model-input export with agent conditioning and agent anonymization.

#ifndef DEONTIC_CORPUS_EXPORT_H_
#define DEONTIC_CORPUS_EXPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "deontic/corpus/record.h"
#include "deontic/corpus/stats.h"
#include "deontic/types.h"

namespace deontic::corpus {

enum class Conditioning { kNone, kAgentToken };
enum class Anonymize { kOff, kConsistent, kRandom };

std::optional<Conditioning> ParseConditioning(std::string_view name);
std::optional<Anonymize> ParseAnonymize(std::string_view name);

struct ExportOptions {
  Conditioning conditioning = Conditioning::kAgentToken;
  Anonymize anonymize = Anonymize::kOff;
  std::uint64_t seed = 0;
  GroupOf group_of;  // null: standard tenant/landlord grouping
  // Aliases replaced besides the records' own agents.
  std::vector<std::string> extra_aliases;
};

struct ExportRecord {
  std::string sentence_id;
  std::string agent;
  std::vector<std::string> tokens;
  std::vector<std::string> tags;  // BIOS, one per token
  LabelSet labels;
};

nlohmann::ordered_json ToJson(const ExportRecord &record);

// "[TENANT]" for group "Tenant".
std::string ConditioningToken(std::string_view group);

// Anonymized alias tokens are "Agent1", "Agent2", ...: under kConsistent
// each alias gets a fixed token for the whole corpus (aliases numbered in
// sorted order); under kRandom each record draws distinct tokens for its
// aliases from an RNG seeded by (seed, sentence_id, agent). Alias
// occurrences are matched case-insensitively on whole tokens, longest
// alias first, and collapse to one token; spans are remapped.
//
// Records without tokens use their whitespace-split text. Throws
// Error(kConfig) when an alias collides with a reserved token.
std::vector<ExportRecord> ExportConditioned(
    const std::vector<AnnotationRecord> &records, const ExportOptions &options);

}  // namespace deontic::corpus

#endif  // DEONTIC_CORPUS_EXPORT_H_

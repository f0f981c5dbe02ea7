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

// Provision-level passes: definitional filtering, bullet merging and
// contract-type detection.

#ifndef DEONTIC_INGEST_FILTERS_H_
#define DEONTIC_INGEST_FILTERS_H_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deontic/ingest/provision.h"

namespace deontic::ingest {

const std::vector<std::string> &DefaultDefinitionCues();

struct DiscardedProvision {
  Provision provision;
  std::string cue;  // the first cue that matched
};

struct DefinitionFilterResult {
  std::vector<Provision> kept;
  std::vector<DiscardedProvision> discarded;
};

// Drops provisions containing any cue, matched case-insensitively on word
// boundaries. Survivors keep their order.
DefinitionFilterResult FilterDefinitions(
    const std::vector<Provision> &provisions,
    const std::vector<std::string> &cues = DefaultDefinitionCues());

// Returns whether a provision is a complete sentence, or nullopt if unknown.
using CompletenessOracle = std::function<std::optional<bool>(const Provision &)>;

// Oracle backed by a table keyed by ProvisionKey().
CompletenessOracle CompletenessFromTable(std::map<std::string, bool> table);

// Fallback when no parser-derived flags exist: a provision is complete when,
// after its enumerator, it has at least three words and ends in '.', '!' or
// '?'.
CompletenessOracle HeuristicCompleteness();

// True for texts opening with a sub-bullet enumerator: "(iv", "(b", "3.",
// "1.2" and the like.
bool IsSubBullet(std::string_view text);

// The outcome of combining one child with its parent's current text.
struct BulletCombination {
  int rule = 0;  // 1..4
  std::string text;
};

// Applies the four combination rules in order to a (parent, child) pair.
// Returns nullopt if no rule applies. Completeness is looked up lazily, only
// when a rule needs it; a missing value throws Error(kConfig).
std::optional<BulletCombination> CombineBullet(
    const Provision &parent, std::string_view parent_text,
    const Provision &child, const CompletenessOracle &complete);

// Sequential pass over the provisions. A sub-bullet is combined with the
// nearest preceding provision that is not itself a sub-bullet; the parent's
// text accumulates merged children and the parent keeps its index. The first
// child that cannot be combined closes the group, so it and any later
// sub-bullets of the run stay as separate provisions. Children that merge
// disappear from the output.
std::vector<Provision> MergeBullets(const std::vector<Provision> &provisions,
                                    const CompletenessOracle &complete);

// Scans the first `window` provisions for a line whose letters are all
// uppercase and that contains the word AGREEMENT; returns the word before
// AGREEMENT lowercased ("LEASE AGREEMENT" -> "lease").
std::optional<std::string> DetectContractType(
    const std::vector<Provision> &provisions, int window = 20);

}  // namespace deontic::ingest

#endif  // DEONTIC_INGEST_FILTERS_H_

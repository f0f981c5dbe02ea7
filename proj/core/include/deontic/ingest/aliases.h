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

#ifndef DEONTIC_INGEST_ALIASES_H_
#define DEONTIC_INGEST_ALIASES_H_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "deontic/ingest/provision.h"

namespace deontic::ingest {

enum class EntityKind { kCompany, kPerson };

// A company or person mention inside a provision; offsets are bytes into
// the provision text.
struct EntityMention {
  int provision_index = 0;
  std::size_t begin = 0;
  std::size_t end = 0;
  EntityKind kind = EntityKind::kCompany;
};

EntityMention EntityMentionFromJson(const nlohmann::json &j);
nlohmann::ordered_json ToJson(const EntityMention &m);

// The parenthetical pattern is applied to the text right after a mention and
// must match there. Group 1 captures the alias. ECMAScript syntax, matched
// case-insensitively.
//
//   ACME Corp. ("Lessor")          -> Lessor
//   John Smith (the "Guarantor")   -> Guarantor
//   XYZ LLC (hereinafter "Tenant") -> Tenant
extern const char kDefaultAliasPattern[];

struct AliasConfig {
  std::string pattern = kDefaultAliasPattern;
  int window = 20;          // provisions scanned from the start
  int min_frequency = 2;    // keep aliases seen at least this often
  std::vector<std::string> overrides;  // always kept
  // Lowercased alias -> canonical group. Unmapped aliases are their own
  // group.
  std::map<std::string, std::string> group_map = {
      {"tenant", "Tenant"},     {"subtenant", "Tenant"},
      {"lessee", "Tenant"},     {"landlord", "Landlord"},
      {"sublandlord", "Landlord"}, {"lessor", "Landlord"},
  };

  std::string GroupOf(const std::string &alias) const;
};

AliasConfig AliasConfigFromJson(const nlohmann::json &j);

struct AliasCandidate {
  std::string alias;
  int provision_index = 0;
  EntityKind kind = EntityKind::kCompany;
};

// One candidate per mention in the window that is followed by a
// parenthetical alias.
std::vector<AliasCandidate> FindAliasCandidates(
    const std::vector<Provision> &provisions,
    const std::vector<EntityMention> &mentions, const AliasConfig &config);

struct AliasSelection {
  std::vector<AgentAlias> aliases;  // by descending frequency, then alias
  std::vector<std::string> warnings;
};

// Counts candidates case-insensitively (the most frequent spelling is
// reported) and keeps those at or above the threshold plus overrides.
// Candidates may come from many contracts of one contract type.
AliasSelection SelectAliases(const std::vector<AliasCandidate> &candidates,
                             const AliasConfig &config);

AliasSelection ExtractAliases(const std::vector<Provision> &provisions,
                              const std::vector<EntityMention> &mentions,
                              const AliasConfig &config);

// Capitalized-word runs directly before a "(" in the window. Runs that
// contain a corporate suffix (Inc, LLC, Corp, ...) are companies, the rest
// persons. Stands in when no entity sidecar is available.
std::vector<EntityMention> FallbackEntityMentions(
    const std::vector<Provision> &provisions, int window = 20);

}  // namespace deontic::ingest

#endif  // DEONTIC_INGEST_ALIASES_H_

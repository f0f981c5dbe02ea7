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

#ifndef DEONTIC_INGEST_PROVISION_H_
#define DEONTIC_INGEST_PROVISION_H_

#include <cstddef>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace deontic::ingest {

// A paragraph-level unit of a contract.
struct Provision {
  std::string contract_id;
  int index = 0;  // ordinal in the extracted document, kept through filtering
  std::string text;
  int depth = 0;
  std::optional<int> parent_index;

  bool operator==(const Provision &) const = default;
};

// "<contract_id>:<index>", the key used by completeness sidecars.
std::string ProvisionKey(const Provision &p);

// A contracting party's short name and the role group it reports under.
struct AgentAlias {
  std::string alias;
  std::string canonical_group;
  int frequency = 0;

  bool operator==(const AgentAlias &) const = default;
};

struct SentenceRecord {
  std::string sentence_id;
  std::string contract_id;
  int provision_index = 0;
  std::string text;
  std::size_t begin = 0;  // [begin, end) into the provision text
  std::size_t end = 0;

  bool operator==(const SentenceRecord &) const = default;
};

struct AgentSentence {
  std::string sentence_id;
  AgentAlias agent;
  std::string text;

  bool operator==(const AgentSentence &) const = default;
};

nlohmann::ordered_json ToJson(const Provision &p);
nlohmann::ordered_json ToJson(const AgentAlias &a);
nlohmann::ordered_json ToJson(const SentenceRecord &s);
nlohmann::ordered_json ToJson(const AgentSentence &s);

Provision ProvisionFromJson(const nlohmann::json &j);
AgentAlias AgentAliasFromJson(const nlohmann::json &j);
SentenceRecord SentenceRecordFromJson(const nlohmann::json &j);
AgentSentence AgentSentenceFromJson(const nlohmann::json &j);

}  // namespace deontic::ingest

#endif  // DEONTIC_INGEST_PROVISION_H_

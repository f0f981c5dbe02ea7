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

#include "deontic/ingest/provision.h"

#include "deontic/error.h"

namespace deontic::ingest {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

template <typename T>
T Field(const json &j, const char *name, const char *type) {
  if (!j.is_object() || !j.contains(name)) {
    throw Error(ErrorKind::kParse, "ingest",
                std::string(type) + " record lacks field '" + name + "'");
  }
  try {
    return j.at(name).get<T>();
  } catch (const json::exception &e) {
    throw Error(ErrorKind::kParse, "ingest",
                std::string(type) + "." + name + ": " + e.what());
  }
}

}  // namespace

std::string ProvisionKey(const Provision &p) {
  return p.contract_id + ":" + std::to_string(p.index);
}

ordered_json ToJson(const Provision &p) {
  ordered_json j;
  j["contract_id"] = p.contract_id;
  j["index"] = p.index;
  j["text"] = p.text;
  j["depth"] = p.depth;
  j["parent_index"] = p.parent_index ? ordered_json(*p.parent_index)
                                     : ordered_json(nullptr);
  return j;
}

ordered_json ToJson(const AgentAlias &a) {
  ordered_json j;
  j["alias"] = a.alias;
  j["canonical_group"] = a.canonical_group;
  j["frequency"] = a.frequency;
  return j;
}

ordered_json ToJson(const SentenceRecord &s) {
  ordered_json j;
  j["sentence_id"] = s.sentence_id;
  j["contract_id"] = s.contract_id;
  j["provision_index"] = s.provision_index;
  j["text"] = s.text;
  j["char_span"] = {s.begin, s.end};
  return j;
}

ordered_json ToJson(const AgentSentence &s) {
  ordered_json j;
  j["sentence_id"] = s.sentence_id;
  j["agent"] = ToJson(s.agent);
  j["text"] = s.text;
  return j;
}

Provision ProvisionFromJson(const json &j) {
  Provision p;
  p.contract_id = Field<std::string>(j, "contract_id", "Provision");
  p.index = Field<int>(j, "index", "Provision");
  p.text = Field<std::string>(j, "text", "Provision");
  p.depth = j.value("depth", 0);
  if (j.contains("parent_index") && !j["parent_index"].is_null()) {
    p.parent_index = j["parent_index"].get<int>();
  }
  return p;
}

AgentAlias AgentAliasFromJson(const json &j) {
  AgentAlias a;
  a.alias = Field<std::string>(j, "alias", "AgentAlias");
  a.canonical_group = j.value("canonical_group", a.alias);
  a.frequency = j.value("frequency", 0);
  return a;
}

SentenceRecord SentenceRecordFromJson(const json &j) {
  SentenceRecord s;
  s.sentence_id = Field<std::string>(j, "sentence_id", "SentenceRecord");
  s.contract_id = j.value("contract_id", "");
  s.provision_index = j.value("provision_index", 0);
  s.text = Field<std::string>(j, "text", "SentenceRecord");
  if (j.contains("char_span")) {
    auto span = j["char_span"].get<std::vector<std::size_t>>();
    if (span.size() != 2) {
      throw Error(ErrorKind::kParse, "ingest",
                  "SentenceRecord.char_span must have two offsets");
    }
    s.begin = span[0];
    s.end = span[1];
  } else {
    s.end = s.text.size();
  }
  return s;
}

AgentSentence AgentSentenceFromJson(const json &j) {
  AgentSentence s;
  s.sentence_id = Field<std::string>(j, "sentence_id", "AgentSentence");
  const json &agent = j.at("agent");
  s.agent = agent.is_string() ? AgentAlias{agent.get<std::string>(),
                                           agent.get<std::string>(), 0}
                              : AgentAliasFromJson(agent);
  s.text = Field<std::string>(j, "text", "AgentSentence");
  return s;
}

}  // namespace deontic::ingest

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

// Dependency-pattern rules that attach triggers to agents.
//
// The engine expects the classic label inventory (nsubj, nsubjpass, aux,
// agent, conj, dobj, pobj, ROOT); run lingrep::NormalizeLabels first on
// Universal Dependencies input. Traversal looks at direct children plus a
// single conj hop.

#ifndef DEONTIC_RULES_ENGINE_H_
#define DEONTIC_RULES_ENGINE_H_

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "deontic/ingest/provision.h"
#include "deontic/lingrep/parse.h"
#include "deontic/rules/lexicon.h"
#include "deontic/types.h"

namespace deontic::rules {

enum class SyntacticContext { kActiveSubject, kPassiveAgent, kConjunct };

std::string_view ContextName(SyntacticContext context);

inline constexpr char kPolicyId[] = "precedence-v1";

// Single-candidate patterns return their type. In passive-agent context a
// payment pattern ("paid", "pay", "payable") prefers Ent and any other
// pattern prefers Obl; otherwise the first candidate by PrecedenceRank
// wins.
DeonticType ResolveType(std::string_view pattern,
                        const std::vector<DeonticType> &candidates,
                        SyntacticContext context);

struct Extraction {
  DeonticType type = DeonticType::kObl;
  std::string trigger;  // sentence surface tokens joined by one space
  std::string pattern;  // lexicon pattern that matched
  std::string agent;
  int start = 0;
  int end = 0;  // inclusive
  int rule = 0;
  SyntacticContext context = SyntacticContext::kActiveSubject;

  bool operator==(const Extraction &) const = default;
};

nlohmann::ordered_json ToJson(const Extraction &e);

// Runs Rules 1-8 over every ROOT/VERB/AUX word. The result is deduplicated
// on (start, end, agent, type), keeping the lowest rule number, and sorted
// by (start, agent, type). Throws Error(kInternal) when a match lies outside
// the sentence.
std::vector<Extraction> ApplyDependencyRules(
    const lingrep::ParsedSentence &parsed,
    const std::vector<TriggerMatch> &matches,
    const std::vector<ingest::AgentAlias> &aliases);

// FindTriggers on the parse's tokens followed by ApplyDependencyRules.
std::vector<Extraction> ExtractSentence(
    const lingrep::ParsedSentence &parsed, const TriggerLexicon &lexicon,
    const std::vector<ingest::AgentAlias> &aliases);

// Union of types extracted for `agent` (case-insensitive); {None} if empty.
LabelSet ToMultilabel(const std::vector<Extraction> &extractions,
                      std::string_view agent);

// Spans extracted for `agent`. When one span carries several types the
// first by PrecedenceRank is kept.
std::vector<TypedSpan> ToSpans(const std::vector<Extraction> &extractions,
                               std::string_view agent);

}  // namespace deontic::rules

#endif  // DEONTIC_RULES_ENGINE_H_

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

#include "deontic/rules/engine.h"

#include <algorithm>
#include <map>
#include <tuple>

#include "deontic/error.h"
#include "deontic/text.h"

namespace deontic::rules {

using lingrep::ParsedSentence;

std::string_view ContextName(SyntacticContext context) {
  switch (context) {
    case SyntacticContext::kActiveSubject: return "active-subject";
    case SyntacticContext::kPassiveAgent: return "passive-agent";
    case SyntacticContext::kConjunct: return "conjunct";
  }
  return "unknown";
}

DeonticType ResolveType(std::string_view pattern,
                        const std::vector<DeonticType> &candidates,
                        SyntacticContext context) {
  if (candidates.empty()) {
    throw Error(ErrorKind::kInternal, "rules",
                "trigger '" + std::string(pattern) + "' has no candidate type");
  }
  if (candidates.size() == 1) return candidates.front();
  auto has = [&](DeonticType t) {
    return std::find(candidates.begin(), candidates.end(), t) !=
           candidates.end();
  };
  if (context == SyntacticContext::kPassiveAgent) {
    bool payment = false;
    for (const std::string &w : text::SplitWords(text::Lower(pattern))) {
      payment = payment || w == "paid" || w == "pay" || w == "payable";
    }
    if (payment && has(DeonticType::kEnt)) return DeonticType::kEnt;
    if (has(DeonticType::kObl)) return DeonticType::kObl;
  }
  return *std::min_element(candidates.begin(), candidates.end(),
                           [](DeonticType a, DeonticType b) {
                             return PrecedenceRank(a) < PrecedenceRank(b);
                           });
}

nlohmann::ordered_json ToJson(const Extraction &e) {
  nlohmann::ordered_json j;
  j["type"] = TypeName(e.type);
  j["trigger"] = e.trigger;
  j["pattern"] = e.pattern;
  j["agent"] = e.agent;
  j["start"] = e.start;
  j["end"] = e.end;
  j["rule"] = e.rule;
  j["context"] = ContextName(e.context);
  return j;
}

namespace {

bool IsPredicate(const lingrep::Token &t) {
  return t.deprel == "ROOT" || t.pos == "VERB" || t.pos == "AUX";
}

class RuleRunner {
 public:
  RuleRunner(const ParsedSentence &parsed,
             const std::vector<TriggerMatch> &matches,
             const std::vector<ingest::AgentAlias> &aliases)
      : s_(parsed), match_at_(parsed.tokens.size(), -1) {
    const int n = parsed.size();
    for (std::size_t k = 0; k < matches.size(); ++k) {
      const TriggerMatch &m = matches[k];
      if (m.start < 0 || m.end < m.start || m.end >= n) {
        throw Error(ErrorKind::kInternal, "rules",
                    "sentence '" + parsed.sentence_id + "': trigger '" +
                        m.pattern + "' at " + std::to_string(m.start) +
                        ".." + std::to_string(m.end) + " outside " +
                        std::to_string(n) + " tokens");
      }
      if (match_at_[m.start] < 0) match_at_[m.start] = static_cast<int>(k);
    }
    matches_ = &matches;
    for (const ingest::AgentAlias &a : aliases) {
      std::vector<std::string> words = text::SplitWords(text::Lower(a.alias));
      if (!words.empty()) alias_words_.emplace_back(std::move(words), a.alias);
    }
    // Longest alias first, then by spelling, so the choice at a token does
    // not depend on the order aliases were supplied in.
    std::sort(alias_words_.begin(), alias_words_.end(),
              [](const auto &a, const auto &b) {
                if (a.first.size() != b.first.size()) {
                  return a.first.size() > b.first.size();
                }
                return a.second < b.second;
              });
    lowered_.reserve(parsed.tokens.size());
    for (const lingrep::Token &t : parsed.tokens) {
      lowered_.push_back(text::Lower(t.surface));
    }
    children_.resize(parsed.tokens.size());
    for (const lingrep::Token &t : parsed.tokens) {
      if (t.head != t.index) children_[t.head].push_back(t.index);
    }
  }

  std::vector<Extraction> Run() {
    for (const lingrep::Token &w : s_.tokens) {
      if (IsPredicate(w)) VisitPredicate(w.index);
    }
    std::vector<Extraction> out;
    out.reserve(found_.size());
    for (auto &[key, e] : found_) out.push_back(std::move(e));
    std::sort(out.begin(), out.end(),
              [](const Extraction &a, const Extraction &b) {
                return std::tie(a.start, a.end, a.agent, a.type, a.rule) <
                       std::tie(b.start, b.end, b.agent, b.type, b.rule);
              });
    return out;
  }

 private:
  struct AuxTrigger {
    int token;
    const TriggerMatch *match;
  };

  const std::string *AliasAt(int i) const {
    for (const auto &[words, alias] : alias_words_) {
      int k = static_cast<int>(words.size());
      if (i - k + 1 < 0) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        ok = lowered_[i - k + 1 + j] == words[j];
      }
      if (ok) return &alias;
    }
    return nullptr;
  }

  std::vector<int> ChildrenWith(int i, std::initializer_list<const char *>
                                           labels) const {
    std::vector<int> out;
    for (int c : children_[i]) {
      for (const char *l : labels) {
        if (s_.tokens[c].deprel == l) {
          out.push_back(c);
          break;
        }
      }
    }
    return out;
  }

  // Aux children of `i` that start a trigger.
  std::vector<AuxTrigger> AuxTriggers(int i) const {
    std::vector<AuxTrigger> out;
    for (int c : ChildrenWith(i, {"aux"})) {
      if (match_at_[c] >= 0) out.push_back({c, &(*matches_)[match_at_[c]]});
    }
    return out;
  }

  std::vector<std::pair<int, const std::string *>> AliasChildren(
      int i, std::initializer_list<const char *> labels) const {
    std::vector<std::pair<int, const std::string *>> out;
    for (int c : ChildrenWith(i, labels)) {
      if (const std::string *a = AliasAt(c)) out.emplace_back(c, a);
    }
    return out;
  }

  // Alias tokens under an agent child of `i`: the child itself when it is
  // an alias (UD attaches the noun directly), else its alias children (the
  // preposition-headed form).
  std::vector<int> AgentAliasTokens(int i) const {
    std::vector<int> out;
    for (int c1 : ChildrenWith(i, {"agent"})) {
      if (AliasAt(c1) != nullptr) {
        out.push_back(c1);
        continue;
      }
      for (int c3 : children_[c1]) {
        if (AliasAt(c3) != nullptr) out.push_back(c3);
      }
    }
    return out;
  }

  void Emit(const TriggerMatch &m, const std::string &agent, int rule,
            SyntacticContext context) {
    Extraction e;
    e.type = ResolveType(m.pattern, m.candidates, context);
    std::vector<std::string> surface;
    for (int k = m.start; k <= m.end; ++k) {
      surface.push_back(s_.tokens[k].surface);
    }
    e.trigger = text::Join(surface, " ");
    e.pattern = m.pattern;
    e.agent = agent;
    e.start = m.start;
    e.end = m.end;
    e.rule = rule;
    e.context = context;
    auto key = std::make_tuple(e.start, e.end, e.agent, e.type);
    auto it = found_.find(key);
    if (it == found_.end()) {
      found_.emplace(key, std::move(e));
    } else if (rule < it->second.rule) {
      it->second = std::move(e);
    }
  }

  void VisitPredicate(int w) {
    const std::vector<AuxTrigger> aux = AuxTriggers(w);

    std::vector<std::pair<int, std::vector<AuxTrigger>>> conj_verbs;
    for (int v : ChildrenWith(w, {"conj"})) {
      if (s_.tokens[v].pos != "VERB") continue;
      std::vector<AuxTrigger> t1 = AuxTriggers(v);
      if (!t1.empty()) conj_verbs.emplace_back(v, std::move(t1));
    }

    std::vector<std::string> bound;
    auto bind = [&](const std::string &a) {
      if (std::find(bound.begin(), bound.end(), a) == bound.end()) {
        bound.push_back(a);
      }
    };

    // Rules 1 and 2: alias subject, plus aliases conjoined with it.
    if (!aux.empty()) {
      for (const auto &[a1_tok, a1] : AliasChildren(w, {"nsubj", "nsubjpass"})) {
        for (const AuxTrigger &t : aux) {
          Emit(*t.match, *a1, 1, SyntacticContext::kActiveSubject);
        }
        bind(*a1);
        for (const auto &[a2_tok, a2] : AliasChildren(a1_tok, {"conj"})) {
          for (const AuxTrigger &t : aux) {
            Emit(*t.match, *a2, 2, SyntacticContext::kConjunct);
          }
          bind(*a2);
        }
      }
    }

    // Rules 3, 4 and 5: alias under an agent child.
    if (!aux.empty()) {
      for (int c3 : AgentAliasTokens(w)) {
        const std::string *a1 = AliasAt(c3);
        for (const AuxTrigger &t : aux) {
          Emit(*t.match, *a1, 3, SyntacticContext::kPassiveAgent);
        }
        bind(*a1);
        auto conj_aliases = AliasChildren(c3, {"conj"});
        if (conj_aliases.empty()) continue;
        if (!conj_verbs.empty()) {
          for (const auto &[a2_tok, a2] : conj_aliases) {
            for (const auto &[v, t1s] : conj_verbs) {
              for (const AuxTrigger &t1 : t1s) {
                Emit(*t1.match, *a2, 4, SyntacticContext::kConjunct);
              }
            }
          }
        } else {
          for (const auto &[a2_tok, a2] : conj_aliases) {
            for (const AuxTrigger &t : aux) {
              Emit(*t.match, *a2, 5, SyntacticContext::kPassiveAgent);
            }
            bind(*a2);
          }
        }
      }
    }

    // Rule 6: alias conjoined under an object's child; the conjoined verb's
    // trigger applies.
    if (!conj_verbs.empty()) {
      for (int c : ChildrenWith(w, {"dobj", "pobj"})) {
        for (int c1 : children_[c]) {
          for (const auto &[a1_tok, a1] : AliasChildren(c1, {"conj"})) {
            for (const auto &[v, t1s] : conj_verbs) {
              for (const AuxTrigger &t1 : t1s) {
                Emit(*t1.match, *a1, 6, SyntacticContext::kConjunct);
              }
            }
          }
        }
      }
    }

    // Rules 7 and 8: a conjoined verb with its own trigger.
    if (aux.empty()) return;
    for (const auto &[v, t1s] : conj_verbs) {
      std::vector<const std::string *> agents;
      for (int a : AgentAliasTokens(v)) agents.push_back(AliasAt(a));
      if (!agents.empty()) {
        for (const std::string *a2 : agents) {
          for (const AuxTrigger &t : aux) {
            Emit(*t.match, *a2, 7, SyntacticContext::kPassiveAgent);
          }
        }
        continue;
      }
      for (const std::string &agent : bound) {
        for (const AuxTrigger &t1 : t1s) {
          Emit(*t1.match, agent, 8, SyntacticContext::kConjunct);
        }
      }
    }
  }

  const ParsedSentence &s_;
  const std::vector<TriggerMatch> *matches_ = nullptr;
  std::vector<int> match_at_;
  std::vector<std::pair<std::vector<std::string>, std::string>> alias_words_;
  std::vector<std::string> lowered_;
  std::vector<std::vector<int>> children_;
  std::map<std::tuple<int, int, std::string, DeonticType>, Extraction> found_;
};

}  // namespace

std::vector<Extraction> ApplyDependencyRules(
    const ParsedSentence &parsed, const std::vector<TriggerMatch> &matches,
    const std::vector<ingest::AgentAlias> &aliases) {
  return RuleRunner(parsed, matches, aliases).Run();
}

std::vector<Extraction> ExtractSentence(
    const ParsedSentence &parsed, const TriggerLexicon &lexicon,
    const std::vector<ingest::AgentAlias> &aliases) {
  return ApplyDependencyRules(
      parsed, FindTriggers(parsed.Surfaces(), lexicon), aliases);
}

LabelSet ToMultilabel(const std::vector<Extraction> &extractions,
                      std::string_view agent) {
  LabelSet labels;
  for (const Extraction &e : extractions) {
    if (text::EqualsIgnoreCase(e.agent, agent)) labels.insert(e.type);
  }
  if (labels.empty()) labels.insert(DeonticType::kNone);
  return labels;
}

std::vector<TypedSpan> ToSpans(const std::vector<Extraction> &extractions,
                               std::string_view agent) {
  std::map<std::pair<int, int>, DeonticType> best;
  for (const Extraction &e : extractions) {
    if (!text::EqualsIgnoreCase(e.agent, agent)) continue;
    auto [it, inserted] = best.emplace(std::make_pair(e.start, e.end), e.type);
    if (!inserted && PrecedenceRank(e.type) < PrecedenceRank(it->second)) {
      it->second = e.type;
    }
  }
  std::vector<TypedSpan> spans;
  for (const auto &[range, type] : best) {
    spans.push_back({type, range.first, range.second});
  }
  SortSpans(spans);
  return spans;
}

}  // namespace deontic::rules

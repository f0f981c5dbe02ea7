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

#include "deontic/ingest/aliases.h"

#include <algorithm>
#include <map>
#include <regex>
#include <set>

#include "deontic/error.h"
#include "deontic/text.h"

namespace deontic::ingest {

using nlohmann::json;
using nlohmann::ordered_json;

const char kDefaultAliasPattern[] =
    R"(^\s*,?\s*\(\s*(?:hereinafter\s+(?:referred\s+to\s+as\s+|called\s+)?)?)"
    R"((?:the\s+)?(?:"|'|“|”|‘|’)?)"
    R"(([A-Za-z][A-Za-z-]*(?:\s+[A-Za-z][A-Za-z-]*){0,3}))"
    R"((?:"|'|“|”|‘|’)?\s*\))";

std::string AliasConfig::GroupOf(const std::string &alias) const {
  auto it = group_map.find(text::Lower(alias));
  return it == group_map.end() ? alias : it->second;
}

AliasConfig AliasConfigFromJson(const json &j) {
  AliasConfig config;
  if (!j.is_object()) return config;
  config.pattern = j.value("pattern", config.pattern);
  config.window = j.value("window", config.window);
  config.min_frequency = j.value("min_frequency", config.min_frequency);
  if (j.contains("overrides")) {
    config.overrides = j["overrides"].get<std::vector<std::string>>();
  }
  if (j.contains("group_map")) {
    config.group_map.clear();
    for (const auto &[alias, group] : j["group_map"].items()) {
      config.group_map[text::Lower(alias)] = group.get<std::string>();
    }
  }
  return config;
}

EntityMention EntityMentionFromJson(const json &j) {
  EntityMention m;
  try {
    m.provision_index = j.at("provision_index").get<int>();
    m.begin = j.at("start").get<std::size_t>();
    m.end = j.at("end").get<std::size_t>();
    std::string kind = text::Lower(j.value("kind", "company"));
    if (kind == "company" || kind == "org") {
      m.kind = EntityKind::kCompany;
    } else if (kind == "person") {
      m.kind = EntityKind::kPerson;
    } else {
      throw Error(ErrorKind::kParse, "ingest",
                  "entity kind must be company or person, got '" + kind + "'");
    }
  } catch (const json::exception &e) {
    throw Error(ErrorKind::kParse, "ingest",
                std::string("entity mention: ") + e.what());
  }
  return m;
}

ordered_json ToJson(const EntityMention &m) {
  ordered_json j;
  j["provision_index"] = m.provision_index;
  j["start"] = m.begin;
  j["end"] = m.end;
  j["kind"] = m.kind == EntityKind::kCompany ? "company" : "person";
  return j;
}

std::vector<AliasCandidate> FindAliasCandidates(
    const std::vector<Provision> &provisions,
    const std::vector<EntityMention> &mentions, const AliasConfig &config) {
  std::regex pattern;
  try {
    pattern = std::regex(config.pattern, std::regex::ECMAScript |
                                             std::regex::icase);
  } catch (const std::regex_error &e) {
    throw Error(ErrorKind::kConfig, "ingest",
                std::string("bad alias pattern: ") + e.what());
  }

  std::size_t limit =
      std::min(provisions.size(), static_cast<std::size_t>(config.window));
  std::map<int, const Provision *> window;
  for (std::size_t k = 0; k < limit; ++k) {
    window[provisions[k].index] = &provisions[k];
  }

  std::vector<AliasCandidate> candidates;
  for (const EntityMention &m : mentions) {
    auto it = window.find(m.provision_index);
    if (it == window.end()) continue;
    const std::string &t = it->second->text;
    if (m.end > t.size() || m.begin >= m.end) continue;
    std::smatch match;
    auto from = t.begin() + static_cast<std::ptrdiff_t>(m.end);
    if (!std::regex_search(from, t.end(), match, pattern,
                           std::regex_constants::match_continuous)) {
      continue;
    }
    std::string alias = text::CollapseWhitespace(match[1].str());
    if (alias.empty()) continue;
    candidates.push_back({alias, m.provision_index, m.kind});
  }
  return candidates;
}

AliasSelection SelectAliases(const std::vector<AliasCandidate> &candidates,
                             const AliasConfig &config) {
  struct Tally {
    int total = 0;
    std::map<std::string, int> spellings;
    std::string first_spelling;
  };
  std::map<std::string, Tally> tallies;
  for (const AliasCandidate &c : candidates) {
    Tally &t = tallies[text::Lower(c.alias)];
    if (t.total == 0) t.first_spelling = c.alias;
    ++t.total;
    ++t.spellings[c.alias];
  }

  auto spelling = [](const Tally &t) {
    std::string best = t.first_spelling;
    int best_count = t.spellings.at(best);
    for (const auto &[s, n] : t.spellings) {
      if (n > best_count) {
        best = s;
        best_count = n;
      }
    }
    return best;
  };

  AliasSelection selection;
  std::set<std::string> chosen;
  for (const auto &[key, tally] : tallies) {
    if (tally.total < config.min_frequency) continue;
    std::string alias = spelling(tally);
    selection.aliases.push_back({alias, config.GroupOf(alias), tally.total});
    chosen.insert(key);
  }
  for (const std::string &o : config.overrides) {
    std::string key = text::Lower(o);
    if (chosen.contains(key)) continue;
    auto it = tallies.find(key);
    selection.aliases.push_back(
        {o, config.GroupOf(o), it == tallies.end() ? 0 : it->second.total});
    chosen.insert(key);
  }
  std::sort(selection.aliases.begin(), selection.aliases.end(),
            [](const AgentAlias &a, const AgentAlias &b) {
              if (a.frequency != b.frequency) return a.frequency > b.frequency;
              return a.alias < b.alias;
            });
  if (selection.aliases.empty()) {
    selection.warnings.push_back(
        candidates.empty()
            ? "no parenthetical alias found"
            : "no alias reached frequency " +
                  std::to_string(config.min_frequency));
  }
  return selection;
}

AliasSelection ExtractAliases(const std::vector<Provision> &provisions,
                              const std::vector<EntityMention> &mentions,
                              const AliasConfig &config) {
  return SelectAliases(FindAliasCandidates(provisions, mentions, config),
                       config);
}

std::vector<EntityMention> FallbackEntityMentions(
    const std::vector<Provision> &provisions, int window) {
  static const std::set<std::string> kConnectors = {"of", "and", "&", "de",
                                                    "the"};
  static const std::set<std::string> kCorporate = {
      "inc",  "inc.", "llc",   "l.l.c.", "corp",    "corp.",   "corporation",
      "co",   "co.",  "ltd",   "ltd.",   "lp",      "l.p.",    "llp",
      "company", "trust", "partners", "partnership", "n.a.", "plc", "bank"};

  std::vector<EntityMention> mentions;
  std::size_t limit =
      std::min(provisions.size(), static_cast<std::size_t>(window));
  for (std::size_t k = 0; k < limit; ++k) {
    const std::string &t = provisions[k].text;
    for (std::size_t open = t.find('('); open != std::string::npos;
         open = t.find('(', open + 1)) {
      // Walk back over whitespace and an optional comma.
      std::size_t end = open;
      while (end > 0 && text::IsSpace(t[end - 1])) --end;
      if (end > 0 && t[end - 1] == ',') {
        --end;
        while (end > 0 && text::IsSpace(t[end - 1])) --end;
      }
      // Collect words backwards while they are capitalized or connectors.
      std::size_t begin = end;
      std::size_t cursor = end;
      bool corporate = false;
      int capitalized = 0;
      while (cursor > 0) {
        std::size_t word_end = cursor;
        while (word_end > 0 && (t[word_end - 1] == ',' ||
                                text::IsSpace(t[word_end - 1]))) {
          --word_end;
        }
        std::size_t word_begin = word_end;
        while (word_begin > 0 && !text::IsSpace(t[word_begin - 1]) &&
               t[word_begin - 1] != ',') {
          --word_begin;
        }
        if (word_begin == word_end) break;
        std::string word = t.substr(word_begin, word_end - word_begin);
        std::string lower = text::Lower(word);
        bool cap = text::IsUpper(word[0]);
        if (!cap && !kConnectors.contains(lower)) break;
        if (cap) {
          ++capitalized;
          begin = word_begin;
        }
        if (kCorporate.contains(lower)) corporate = true;
        cursor = word_begin;
      }
      if (capitalized == 0) continue;
      mentions.push_back({provisions[k].index, begin, end,
                          corporate ? EntityKind::kCompany
                                    : EntityKind::kPerson});
    }
  }
  return mentions;
}

}  // namespace deontic::ingest

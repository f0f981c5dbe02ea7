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

#include "deontic/corpus/export.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "deontic/error.h"
#include "deontic/ingest/aliases.h"
#include "deontic/io.h"
#include "deontic/rules/tags.h"
#include "deontic/text.h"

namespace deontic::corpus {

std::optional<Conditioning> ParseConditioning(std::string_view name) {
  std::string lower = text::Lower(name);
  if (lower == "none") return Conditioning::kNone;
  if (lower == "agent-token" || lower == "agent") return Conditioning::kAgentToken;
  return std::nullopt;
}

std::optional<Anonymize> ParseAnonymize(std::string_view name) {
  std::string lower = text::Lower(name);
  if (lower == "off" || lower == "none") return Anonymize::kOff;
  if (lower == "consistent" || lower == "ar") return Anonymize::kConsistent;
  if (lower == "random" || lower == "arr") return Anonymize::kRandom;
  return std::nullopt;
}

nlohmann::ordered_json ToJson(const ExportRecord &r) {
  nlohmann::ordered_json j;
  j["sentence_id"] = r.sentence_id;
  j["agent"] = r.agent;
  j["text"] = text::Join(r.tokens, " ");
  j["tokens"] = r.tokens;
  j["tags"] = r.tags;
  j["labels"] = LabelNames(r.labels);
  return j;
}

std::string ConditioningToken(std::string_view group) {
  return "[" + text::Upper(group) + "]";
}

namespace {

std::string AnonToken(std::size_t i) { return "Agent" + std::to_string(i + 1); }

std::uint64_t RecordSeed(std::uint64_t seed, const std::string &sentence_id,
                         const std::string &agent) {
  std::string digest = io::Sha256Hex(std::to_string(seed) + '\x1f' +
                                     sentence_id + '\x1f' + agent);
  return std::stoull(digest.substr(0, 16), nullptr, 16);
}

}  // namespace

std::vector<ExportRecord> ExportConditioned(
    const std::vector<AnnotationRecord> &records, const ExportOptions &options) {
  GroupOf group_of = options.group_of;
  if (!group_of) {
    static const ingest::AliasConfig kDefault;
    group_of = [](const std::string &agent) { return kDefault.GroupOf(agent); };
  }

  // Unique aliases, keyed and ordered by lowercase spelling.
  std::set<std::string> alias_keys;
  std::set<std::string> groups;
  for (const AnnotationRecord &r : records) {
    alias_keys.insert(text::Lower(text::CollapseWhitespace(r.agent)));
    groups.insert(group_of(r.agent));
  }
  for (const std::string &a : options.extra_aliases) {
    alias_keys.insert(text::Lower(text::CollapseWhitespace(a)));
  }
  alias_keys.erase("");
  std::vector<std::string> aliases(alias_keys.begin(), alias_keys.end());
  std::map<std::string, std::size_t> alias_index;
  for (std::size_t i = 0; i < aliases.size(); ++i) alias_index[aliases[i]] = i;

  std::set<std::string> reserved;
  if (options.conditioning == Conditioning::kAgentToken) {
    for (const std::string &g : groups) {
      reserved.insert(text::Lower(ConditioningToken(g)));
    }
  }
  if (options.anonymize != Anonymize::kOff) {
    for (std::size_t i = 0; i < aliases.size(); ++i) {
      reserved.insert(text::Lower(AnonToken(i)));
    }
  }
  for (const std::string &a : aliases) {
    if (reserved.contains(a)) {
      throw Error(ErrorKind::kConfig, "corpus",
                  "alias '" + a + "' collides with a reserved token");
    }
  }

  // Alias word lists, longest first.
  std::vector<std::pair<std::vector<std::string>, std::size_t>> patterns;
  for (std::size_t i = 0; i < aliases.size(); ++i) {
    patterns.emplace_back(text::SplitWords(aliases[i]), i);
  }
  std::stable_sort(patterns.begin(), patterns.end(),
                   [](const auto &a, const auto &b) {
                     return a.first.size() > b.first.size();
                   });

  std::vector<ExportRecord> out;
  out.reserve(records.size());
  for (const AnnotationRecord &r : records) {
    std::vector<std::string> tokens =
        r.tokens ? *r.tokens : text::SplitWords(r.text.value_or(""));
    std::vector<std::string> lowered;
    for (const std::string &t : tokens) lowered.push_back(text::Lower(t));

    std::vector<std::string> new_tokens;
    std::vector<int> remap(tokens.size());
    if (options.anonymize == Anonymize::kOff) {
      new_tokens = tokens;
      for (std::size_t i = 0; i < tokens.size(); ++i) remap[i] = static_cast<int>(i);
    } else {
      // Locate alias occurrences first so random draws cover exactly the
      // aliases present.
      std::vector<std::pair<std::size_t, std::size_t>> hits;  // (len, alias)
      hits.assign(tokens.size(), {0, 0});
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        for (const auto &[words, index] : patterns) {
          if (i + words.size() > tokens.size()) continue;
          if (std::equal(words.begin(), words.end(), lowered.begin() + i)) {
            hits[i] = {words.size(), index};
            break;
          }
        }
      }
      std::vector<std::string> token_for(aliases.size());
      if (options.anonymize == Anonymize::kConsistent) {
        for (std::size_t i = 0; i < aliases.size(); ++i) token_for[i] = AnonToken(i);
      } else {
        std::set<std::size_t> present;
        for (std::size_t i = 0; i < tokens.size();) {
          if (hits[i].first > 0) {
            present.insert(hits[i].second);
            i += hits[i].first;
          } else {
            ++i;
          }
        }
        std::vector<std::size_t> pool(aliases.size());
        for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
        std::mt19937_64 rng(RecordSeed(options.seed, r.sentence_id, r.agent));
        for (std::size_t i = pool.size(); i > 1; --i) {
          std::swap(pool[i - 1], pool[rng() % i]);
        }
        std::size_t k = 0;
        for (std::size_t alias : present) token_for[alias] = AnonToken(pool[k++]);
      }
      for (std::size_t i = 0; i < tokens.size();) {
        int target = static_cast<int>(new_tokens.size());
        if (hits[i].first > 0) {
          new_tokens.push_back(token_for[hits[i].second]);
          for (std::size_t j = 0; j < hits[i].first; ++j) remap[i + j] = target;
          i += hits[i].first;
        } else {
          new_tokens.push_back(tokens[i]);
          remap[i] = target;
          ++i;
        }
      }
    }

    std::vector<TypedSpan> spans;
    for (const TypedSpan &s : r.spans) {
      if (s.start < 0 || s.end >= static_cast<int>(tokens.size()) ||
          s.end < s.start) {
        throw Error(ErrorKind::kValidation, "corpus",
                    "record '" + r.sentence_id + "': span outside tokens");
      }
      spans.push_back({s.type, remap[s.start], remap[s.end]});
    }
    int offset = 0;
    ExportRecord e;
    e.sentence_id = r.sentence_id;
    e.agent = r.agent;
    e.labels = r.labels;
    if (options.conditioning == Conditioning::kAgentToken) {
      e.tokens.push_back(ConditioningToken(group_of(r.agent)));
      offset = 1;
    }
    e.tokens.insert(e.tokens.end(), new_tokens.begin(), new_tokens.end());
    for (TypedSpan &s : spans) {
      s.start += offset;
      s.end += offset;
    }
    e.tags = rules::TagStrings(
        rules::SpansToTags(spans, static_cast<int>(e.tokens.size())));
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace deontic::corpus

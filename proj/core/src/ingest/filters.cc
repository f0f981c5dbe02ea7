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

#include "deontic/ingest/filters.h"

#include <algorithm>
#include <regex>
#include <set>

#include "deontic/error.h"
#include "deontic/text.h"

namespace deontic::ingest {

const std::vector<std::string> &DefaultDefinitionCues() {
  static const auto *cues = new std::vector<std::string>{
      "shall mean", "means", "shall have the meaning", "has the meaning"};
  return *cues;
}

DefinitionFilterResult FilterDefinitions(
    const std::vector<Provision> &provisions,
    const std::vector<std::string> &cues) {
  DefinitionFilterResult result;
  for (const Provision &p : provisions) {
    const std::string *hit = nullptr;
    for (const std::string &cue : cues) {
      if (text::ContainsWord(p.text, cue)) {
        hit = &cue;
        break;
      }
    }
    if (hit) {
      result.discarded.push_back({p, *hit});
    } else {
      result.kept.push_back(p);
    }
  }
  return result;
}

CompletenessOracle CompletenessFromTable(std::map<std::string, bool> table) {
  return [table = std::move(table)](const Provision &p) -> std::optional<bool> {
    auto it = table.find(ProvisionKey(p));
    if (it == table.end()) return std::nullopt;
    return it->second;
  };
}

namespace {

// Enumerator patterns: "(iv", "(b", and runs of digits and dots.
const std::regex &SubBulletPattern() {
  static const auto *re =
      new std::regex(R"(^(\([ivx]+|\([a-zA-Z]+|[0-9.]+))");
  return *re;
}

// Text after the leading enumerator token.
std::string_view Content(std::string_view child) {
  std::size_t i = 0;
  while (i < child.size() && !text::IsSpace(child[i])) ++i;
  while (i < child.size() && text::IsSpace(child[i])) ++i;
  return child.substr(i);
}

bool StartsLowercase(std::string_view child) {
  std::string_view content = Content(child);
  for (char c : content) {
    if (text::IsAlpha(c)) return text::IsLower(c);
    if (!(c == '"' || c == '\'' || c == '(')) return false;
  }
  return false;
}

std::string StripTrailingColon(std::string_view s) {
  s = text::Trim(s);
  if (!s.empty() && s.back() == ':') s.remove_suffix(1);
  return std::string(text::Trim(s));
}

bool Complete(const CompletenessOracle &oracle, const Provision &p) {
  std::optional<bool> value = oracle ? oracle(p) : std::nullopt;
  if (!value) {
    throw Error(ErrorKind::kConfig, "ingest",
                "no completeness value for provision " + ProvisionKey(p));
  }
  return *value;
}

}  // namespace

bool IsSubBullet(std::string_view text) {
  return std::regex_search(text.begin(), text.end(), SubBulletPattern());
}

CompletenessOracle HeuristicCompleteness() {
  return [](const Provision &p) -> std::optional<bool> {
    std::string_view body = text::Trim(p.text);
    if (IsSubBullet(body)) body = Content(body);
    body = text::Trim(body);
    if (body.empty()) return false;
    char last = body.back();
    return text::SplitWords(body).size() >= 3 &&
           (last == '.' || last == '!' || last == '?');
  };
}

std::optional<BulletCombination> CombineBullet(
    const Provision &parent, std::string_view parent_text,
    const Provision &child, const CompletenessOracle &complete) {
  std::string_view trimmed = text::Trim(parent_text);
  std::string lower = text::Lower(trimmed);
  bool mentions_follow = lower.find("follow") != std::string::npos ||
                         lower.find("below:") != std::string::npos;
  const std::string &child_text = child.text;

  if (!mentions_follow && !Complete(complete, child) &&
      Complete(complete, parent)) {
    return BulletCombination{1, StripTrailingColon(trimmed) + " " + child_text};
  }
  if (!mentions_follow && StartsLowercase(child_text)) {
    return BulletCombination{2, StripTrailingColon(trimmed) + " " + child_text};
  }
  static constexpr std::string_view kTheFollowing = "the following:";
  if (text::EndsWith(lower, kTheFollowing)) {
    if (!Complete(complete, child)) {
      std::string_view head =
          text::Trim(trimmed.substr(0, trimmed.size() - kTheFollowing.size()));
      return BulletCombination{3, std::string(head) + " " + child_text};
    }
    return BulletCombination{3, std::string(trimmed) + " " + child_text};
  }
  if (!trimmed.empty() && trimmed.back() == ':') {
    return BulletCombination{4, std::string(trimmed) + " " + child_text};
  }
  return std::nullopt;
}

std::vector<Provision> MergeBullets(const std::vector<Provision> &provisions,
                                    const CompletenessOracle &complete) {
  std::vector<Provision> out;
  out.reserve(provisions.size());
  std::optional<std::size_t> open_parent;
  for (const Provision &p : provisions) {
    if (!IsSubBullet(p.text)) {
      out.push_back(p);
      open_parent = out.size() - 1;
      continue;
    }
    if (open_parent) {
      Provision &parent = out[*open_parent];
      auto combined = CombineBullet(parent, parent.text, p, complete);
      if (combined) {
        parent.text = std::move(combined->text);
        continue;
      }
    }
    out.push_back(p);
    open_parent.reset();
  }
  return out;
}

std::optional<std::string> DetectContractType(
    const std::vector<Provision> &provisions, int window) {
  static const std::set<std::string> kFillers = {"this", "the", "a", "an",
                                                 "and", "of", "to"};
  std::size_t limit =
      std::min(provisions.size(), static_cast<std::size_t>(window));
  for (std::size_t k = 0; k < limit; ++k) {
    std::string_view line = provisions[k].text;
    bool has_letter = false, all_upper = true;
    for (char c : line) {
      if (!text::IsAlpha(c)) continue;
      has_letter = true;
      if (text::IsLower(c)) {
        all_upper = false;
        break;
      }
    }
    if (!has_letter || !all_upper) continue;

    // Letter-only words, in order.
    std::vector<std::string> words;
    std::string current;
    for (char c : line) {
      if (text::IsAlpha(c)) {
        current.push_back(c);
      } else if (!current.empty()) {
        words.push_back(std::move(current));
        current.clear();
      }
    }
    if (!current.empty()) words.push_back(std::move(current));

    for (std::size_t w = 0; w < words.size(); ++w) {
      if (words[w] != "AGREEMENT") continue;
      if (w == 0) break;
      std::string type = text::Lower(words[w - 1]);
      if (kFillers.contains(type)) break;
      return type;
    }
  }
  return std::nullopt;
}

}  // namespace deontic::ingest

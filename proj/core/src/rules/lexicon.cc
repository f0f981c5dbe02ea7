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

#include "deontic/rules/lexicon.h"

#include <algorithm>

#include "deontic/error.h"
#include "deontic/io.h"
#include "deontic/text.h"

namespace deontic::rules {

extern const char kBundledLexicon[];  // generated from data/lexicon.tsv

int PrecedenceRank(DeonticType type) {
  switch (type) {
    case DeonticType::kNobl: return 0;
    case DeonticType::kNent: return 1;
    case DeonticType::kPro: return 2;
    case DeonticType::kPer: return 3;
    case DeonticType::kEnt: return 4;
    case DeonticType::kObl: return 5;
    case DeonticType::kNone: return 6;
  }
  return 6;
}

TriggerLexicon::TriggerLexicon(std::vector<LexiconEntry> entries) {
  std::map<std::string, LexiconEntry> merged;
  for (LexiconEntry &e : entries) {
    if (e.tokens.empty()) e.tokens = text::SplitWords(text::Lower(e.pattern));
    if (e.tokens.empty()) continue;
    for (std::string &t : e.tokens) t = text::Lower(t);
    e.pattern = text::Join(e.tokens, " ");
    LexiconEntry &slot = merged[e.pattern];
    if (slot.tokens.empty()) {
      slot.pattern = e.pattern;
      slot.tokens = e.tokens;
    }
    for (DeonticType t : e.candidates) {
      if (std::find(slot.candidates.begin(), slot.candidates.end(), t) ==
          slot.candidates.end()) {
        slot.candidates.push_back(t);
      }
    }
  }
  for (auto &[pattern, entry] : merged) {
    if (entry.candidates.empty()) continue;
    std::stable_sort(entry.candidates.begin(), entry.candidates.end(),
                     [](DeonticType a, DeonticType b) {
                       return PrecedenceRank(a) < PrecedenceRank(b);
                     });
    entries_.push_back(std::move(entry));
  }
  if (entries_.empty()) {
    throw Error(ErrorKind::kConfig, "rules", "trigger lexicon is empty");
  }
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const LexiconEntry &a, const LexiconEntry &b) {
                     if (a.tokens.size() != b.tokens.size()) {
                       return a.tokens.size() > b.tokens.size();
                     }
                     return a.pattern < b.pattern;
                   });

  trie_.emplace_back();
  for (int i = 0; i < static_cast<int>(entries_.size()); ++i) {
    int node = 0;
    for (const std::string &token : entries_[i].tokens) {
      auto it = trie_[node].next.find(token);
      if (it == trie_[node].next.end()) {
        trie_.emplace_back();
        int child = static_cast<int>(trie_.size()) - 1;
        trie_[node].next.emplace(token, child);
        node = child;
      } else {
        node = it->second;
      }
    }
    trie_[node].entry = i;
  }
}

const LexiconEntry *TriggerLexicon::Find(std::string_view pattern) const {
  std::string key = text::Join(text::SplitWords(text::Lower(pattern)), " ");
  for (const LexiconEntry &e : entries_) {
    if (e.pattern == key) return &e;
  }
  return nullptr;
}

const LexiconEntry *TriggerLexicon::LongestAt(
    const std::vector<std::string> &lowered, std::size_t start) const {
  const LexiconEntry *best = nullptr;
  int node = 0;
  for (std::size_t i = start; i < lowered.size(); ++i) {
    auto it = trie_[node].next.find(lowered[i]);
    if (it == trie_[node].next.end()) break;
    node = it->second;
    if (trie_[node].entry >= 0) best = &entries_[trie_[node].entry];
  }
  return best;
}

std::vector<std::string> ExpandAlternations(std::string_view pattern) {
  std::vector<std::string> expansions = {""};
  for (const std::string &word : text::SplitWords(pattern)) {
    std::vector<std::string> options;
    std::size_t b = 0;
    for (;;) {
      std::size_t slash = word.find('/', b);
      std::string option = word.substr(b, slash == std::string::npos
                                               ? std::string::npos
                                               : slash - b);
      if (!option.empty()) options.push_back(option);
      if (slash == std::string::npos) break;
      b = slash + 1;
    }
    std::vector<std::string> next;
    for (const std::string &prefix : expansions) {
      for (const std::string &option : options) {
        next.push_back(prefix.empty() ? option : prefix + " " + option);
      }
    }
    expansions = std::move(next);
  }
  if (expansions.size() == 1 && expansions[0].empty()) return {};
  return expansions;
}

TriggerLexicon ParseLexicon(std::string_view table, std::string_view source) {
  std::vector<LexiconEntry> entries;
  int line_no = 0;
  std::size_t b = 0;
  while (b <= table.size()) {
    std::size_t nl = table.find('\n', b);
    std::string_view line =
        table.substr(b, nl == std::string_view::npos ? std::string_view::npos
                                                     : nl - b);
    b = nl == std::string_view::npos ? table.size() + 1 : nl + 1;
    ++line_no;
    std::string_view trimmed = text::Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    auto where = [&] {
      return std::string(source) + ":" + std::to_string(line_no) + ": ";
    };
    std::size_t tab = trimmed.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorKind::kConfig, "rules",
                  where() + "expected '<type><TAB><pattern>'");
    }
    auto type = ParseType(text::Trim(trimmed.substr(0, tab)));
    if (!type || *type == DeonticType::kNone) {
      throw Error(ErrorKind::kConfig, "rules",
                  where() + "unknown trigger type '" +
                      std::string(trimmed.substr(0, tab)) + "'");
    }
    std::vector<std::string> patterns =
        ExpandAlternations(text::Lower(trimmed.substr(tab + 1)));
    if (patterns.empty()) {
      throw Error(ErrorKind::kConfig, "rules", where() + "empty pattern");
    }
    for (std::string &p : patterns) {
      entries.push_back({p, text::SplitWords(p), {*type}});
    }
  }
  return TriggerLexicon(std::move(entries));
}

TriggerLexicon LoadLexiconFile(const std::filesystem::path &path) {
  std::string content;
  try {
    content = io::ReadFile(path);
  } catch (const Error &e) {
    throw Error(ErrorKind::kConfig, "rules",
                "cannot read lexicon '" + path.string() + "'");
  }
  return ParseLexicon(content, path.string());
}

std::string_view DefaultLexiconText() { return kBundledLexicon; }

const TriggerLexicon &DefaultLexicon() {
  static const auto *lexicon =
      new TriggerLexicon(ParseLexicon(DefaultLexiconText(), "bundled"));
  return *lexicon;
}

std::vector<TriggerMatch> FindTriggers(const std::vector<std::string> &tokens,
                                       const TriggerLexicon &lexicon) {
  std::vector<std::string> lowered;
  lowered.reserve(tokens.size());
  for (const std::string &t : tokens) lowered.push_back(text::Lower(t));

  std::vector<TriggerMatch> matches;
  std::size_t i = 0;
  while (i < lowered.size()) {
    const LexiconEntry *e = lexicon.LongestAt(lowered, i);
    if (e == nullptr) {
      ++i;
      continue;
    }
    int start = static_cast<int>(i);
    int end = start + static_cast<int>(e->tokens.size()) - 1;
    matches.push_back({e->pattern, start, end, e->candidates});
    i += e->tokens.size();
  }
  return matches;
}

}  // namespace deontic::rules

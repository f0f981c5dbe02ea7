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

// Trigger lexicon and longest-match trigger search.

#ifndef DEONTIC_RULES_LEXICON_H_
#define DEONTIC_RULES_LEXICON_H_

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "deontic/types.h"

namespace deontic::rules {

// Rank of a type when several rows share a pattern; lower wins.
// Nobl < Nent < Pro < Per < Ent < Obl.
int PrecedenceRank(DeonticType type);

struct LexiconEntry {
  std::string pattern;              // lowercase tokens joined by one space
  std::vector<std::string> tokens;  // lowercase
  std::vector<DeonticType> candidates;  // non-empty, by PrecedenceRank
};

class TriggerLexicon {
 public:
  // Entries are merged by pattern and stored longest-first, then
  // alphabetically. Throws Error(kConfig) when `entries` is empty.
  explicit TriggerLexicon(std::vector<LexiconEntry> entries);

  const std::vector<LexiconEntry> &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // Nullptr when the pattern is not in the lexicon.
  const LexiconEntry *Find(std::string_view pattern) const;

  // Walks the trie from `tokens[start]`; returns the longest entry that
  // matches there, or nullptr.
  const LexiconEntry *LongestAt(const std::vector<std::string> &lowered,
                                std::size_t start) const;

 private:
  struct Node {
    std::map<std::string, int, std::less<>> next;
    int entry = -1;
  };

  std::vector<LexiconEntry> entries_;
  std::vector<Node> trie_;
};

// "shall/will be paid" -> {"shall be paid", "will be paid"}: every word's
// alternatives are combined with every other word's.
std::vector<std::string> ExpandAlternations(std::string_view pattern);

// Parses `type<TAB>pattern` rows; blank lines and '#' comments are skipped.
// Throws Error(kConfig) for unknown types, None rows, malformed rows or an
// empty result.
TriggerLexicon ParseLexicon(std::string_view table,
                            std::string_view source = "lexicon");
TriggerLexicon LoadLexiconFile(const std::filesystem::path &path);

// The bundled trigger table as text, and the lexicon built from it.
std::string_view DefaultLexiconText();
const TriggerLexicon &DefaultLexicon();

struct TriggerMatch {
  std::string pattern;
  int start = 0;
  int end = 0;  // inclusive
  std::vector<DeonticType> candidates;

  bool operator==(const TriggerMatch &) const = default;
};

// Case-insensitive token matching, left to right; at each position the
// longest pattern wins and matching resumes after it, so matches never
// overlap.
std::vector<TriggerMatch> FindTriggers(const std::vector<std::string> &tokens,
                                       const TriggerLexicon &lexicon);

}  // namespace deontic::rules

#endif  // DEONTIC_RULES_LEXICON_H_

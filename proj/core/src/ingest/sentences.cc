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

#include "deontic/ingest/sentences.h"

#include "deontic/text.h"

namespace deontic::ingest {

namespace {

const std::set<std::string> &DefaultAbbreviations() {
  static const auto *abbreviations = new std::set<std::string>{
      "no",   "nos",  "mr",   "mrs",  "ms",   "dr",    "jr",   "sr",
      "inc",  "corp", "co",   "ltd",  "llc",  "l.l.c", "l.p",  "n.a",
      "st",   "ave",  "blvd", "rd",   "ste",  "sec",   "secs", "art",
      "para", "e.g",  "i.e",  "vs",   "v",    "u.s",   "u.s.a", "approx",
      "dept", "fig",  "ex",   "exh",  "p",    "pp",    "cf",   "et al",
  };
  return *abbreviations;
}

bool IsCloser(std::string_view text, std::size_t i, std::size_t *width) {
  char c = text[i];
  if (c == ')' || c == ']' || c == '"' || c == '\'') {
    *width = 1;
    return true;
  }
  // U+201D and U+2019 are E2 80 9D / E2 80 99.
  if (i + 2 < text.size() && static_cast<unsigned char>(c) == 0xE2 &&
      static_cast<unsigned char>(text[i + 1]) == 0x80 &&
      (static_cast<unsigned char>(text[i + 2]) == 0x9D ||
       static_cast<unsigned char>(text[i + 2]) == 0x99)) {
    *width = 3;
    return true;
  }
  return false;
}

bool CanStartSentence(std::string_view text, std::size_t i) {
  char c = text[i];
  if (text::IsUpper(c) || text::IsDigit(c) || c == '(' || c == '"' ||
      c == '\'' || c == '[') {
    return true;
  }
  // U+201C LEFT DOUBLE QUOTATION MARK.
  return i + 2 < text.size() && static_cast<unsigned char>(c) == 0xE2 &&
         static_cast<unsigned char>(text[i + 1]) == 0x80 &&
         static_cast<unsigned char>(text[i + 2]) == 0x9C;
}

bool IsRoman(std::string_view w) {
  if (w.empty()) return false;
  for (char c : w) {
    char l = text::ToLower(c);
    if (l != 'i' && l != 'v' && l != 'x' && l != 'l') return false;
  }
  return true;
}

}  // namespace

RuleBasedSplitter::RuleBasedSplitter()
    : abbreviations_(DefaultAbbreviations()) {}

RuleBasedSplitter::RuleBasedSplitter(std::set<std::string> abbreviations)
    : abbreviations_(std::move(abbreviations)) {}

bool RuleBasedSplitter::Protected(std::string_view t,
                                  std::size_t period) const {
  // The word ending at the period, without leading brackets or quotes.
  std::size_t b = period;
  while (b > 0 && !text::IsSpace(t[b - 1])) --b;
  std::string_view word = t.substr(b, period - b);
  while (!word.empty() && (word.front() == '(' || word.front() == '"' ||
                           word.front() == '\'')) {
    word.remove_prefix(1);
    ++b;
  }
  if (word.empty()) return false;
  std::string lower = text::Lower(word);
  if (abbreviations_.contains(lower)) return true;
  if (word.size() == 1 && text::IsAlpha(word[0])) return true;  // initials
  // "1." or "iv." opening the text is an enumerator.
  bool numeric = true;
  for (char c : word) numeric = numeric && (text::IsDigit(c) || c == '.');
  bool at_start = text::Trim(t.substr(0, b)).empty() ||
                  text::Trim(t.substr(0, b)) == "(";
  return at_start && (numeric || IsRoman(word));
}

std::vector<ByteRange> RuleBasedSplitter::Split(std::string_view t) const {
  std::vector<ByteRange> ranges;
  if (t.empty()) return ranges;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < t.size()) {
    char c = t[i];
    if (c != '.' && c != '!' && c != '?') {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    std::size_t width = 0;
    while (j < t.size() && IsCloser(t, j, &width)) j += width;
    if (j >= t.size() || !text::IsSpace(t[j])) {
      i = j > i + 1 ? j : i + 1;
      continue;
    }
    std::size_t next = j;
    while (next < t.size() && text::IsSpace(t[next])) ++next;
    if (next >= t.size()) break;
    if (!CanStartSentence(t, next) || (c == '.' && Protected(t, i))) {
      i = next;
      continue;
    }
    ranges.emplace_back(start, next);
    start = next;
    i = next;
  }
  if (start < t.size()) ranges.emplace_back(start, t.size());
  return ranges;
}

const SentenceSplitter &DefaultSplitter() {
  static const auto *splitter = new RuleBasedSplitter();
  return *splitter;
}

std::vector<SentenceRecord> SegmentSentences(const Provision &provision,
                                             const SentenceSplitter &splitter) {
  std::vector<SentenceRecord> records;
  int ordinal = 0;
  for (const auto &[b, e] : splitter.Split(provision.text)) {
    SentenceRecord r;
    r.sentence_id = provision.contract_id + ":" +
                    std::to_string(provision.index) + ":" +
                    std::to_string(ordinal++);
    r.contract_id = provision.contract_id;
    r.provision_index = provision.index;
    r.text = provision.text.substr(b, e - b);
    r.begin = b;
    r.end = e;
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<AgentSentence> ExpandPerAgent(
    const SentenceRecord &sentence, const std::vector<AgentAlias> &aliases) {
  std::vector<AgentSentence> out;
  std::set<std::string> seen;
  for (const AgentAlias &alias : aliases) {
    std::string key = text::Lower(alias.alias);
    if (key.empty() || seen.contains(key)) continue;
    if (!text::ContainsWord(sentence.text, alias.alias)) continue;
    seen.insert(key);
    out.push_back({sentence.sentence_id, alias, sentence.text});
  }
  return out;
}

}  // namespace deontic::ingest

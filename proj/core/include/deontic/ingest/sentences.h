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

#ifndef DEONTIC_INGEST_SENTENCES_H_
#define DEONTIC_INGEST_SENTENCES_H_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "deontic/ingest/provision.h"

namespace deontic::ingest {

using ByteRange = std::pair<std::size_t, std::size_t>;

// Splits text into sentence ranges. Implementations must return ranges that
// partition the input: contiguous, non-empty, starting at 0 and ending at
// text.size().
class SentenceSplitter {
 public:
  virtual ~SentenceSplitter() = default;
  virtual std::vector<ByteRange> Split(std::string_view text) const = 0;
};

// Breaks after '.', '!' or '?' (plus any closing quotes or brackets) when
// followed by whitespace and an uppercase letter, digit, quote or opening
// bracket. A period does not end a sentence after a known abbreviation, a
// single letter, or an enumerator at the start of the text. Whitespace
// between sentences stays with the preceding sentence.
class RuleBasedSplitter : public SentenceSplitter {
 public:
  RuleBasedSplitter();
  explicit RuleBasedSplitter(std::set<std::string> abbreviations);

  std::vector<ByteRange> Split(std::string_view text) const override;

 private:
  bool Protected(std::string_view text, std::size_t period) const;

  std::set<std::string> abbreviations_;  // lowercase, without final period
};

const SentenceSplitter &DefaultSplitter();

// Sentence ids are "<contract_id>:<provision_index>:<ordinal>".
std::vector<SentenceRecord> SegmentSentences(
    const Provision &provision,
    const SentenceSplitter &splitter = DefaultSplitter());

// One record per distinct alias (case-insensitive) occurring in the sentence
// on word boundaries, in alias-list order. Sentences mentioning no alias
// yield nothing.
std::vector<AgentSentence> ExpandPerAgent(
    const SentenceRecord &sentence, const std::vector<AgentAlias> &aliases);

}  // namespace deontic::ingest

#endif  // DEONTIC_INGEST_SENTENCES_H_

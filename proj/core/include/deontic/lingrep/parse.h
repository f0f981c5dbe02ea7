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

// Dependency-parsed sentences and the CoNLL-U interchange format.

#ifndef DEONTIC_LINGREP_PARSE_H_
#define DEONTIC_LINGREP_PARSE_H_

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace deontic::lingrep {

struct CharSpan {
  std::size_t begin = 0;
  std::size_t end = 0;  // exclusive

  bool operator==(const CharSpan &) const = default;
};

struct Token {
  int index = 0;  // 0-based
  std::string surface;
  std::string pos;     // universal POS tag: VERB, AUX, NOUN, ...
  int head = 0;        // 0-based; the root points at itself
  std::string deprel;  // ROOT for the root
  std::optional<CharSpan> char_span;

  bool operator==(const Token &) const = default;
};

struct ParsedSentence {
  std::string sentence_id;
  std::string text;  // may be empty when the source carried no text
  std::vector<Token> tokens;
  std::optional<bool> complete;

  bool operator==(const ParsedSentence &) const = default;

  int size() const { return static_cast<int>(tokens.size()); }
  int Root() const;
  // Dependents of token i in index order.
  std::vector<int> Children(int i) const;
  std::vector<std::string> Surfaces() const;
};

// Checks the single-root tree invariant: heads in range, exactly one token
// heading itself, and every token reaching that root. Throws
// Error(kStructural) naming the sentence.
void ValidateTree(const ParsedSentence &sentence);

// Dependency-label normalization. Keys are source labels, values the
// classic labels the rule engine is written against.
using LabelMap = std::map<std::string, std::string>;

// Universal Dependencies -> classic: root->ROOT, nsubj:pass->nsubjpass,
// obj->dobj, aux:pass->auxpass, csubj:pass->csubjpass, obl:agent->agent.
const LabelMap &DefaultLabelMap();

void NormalizeLabels(ParsedSentence &sentence, const LabelMap &map);

// Reads CoNLL-U. Uses the ID, FORM, UPOS, HEAD and DEPREL columns;
// multiword-token ranges ("1-2") and empty nodes ("1.1") are skipped.
// `# sent_id = ...` and `# text = ...` comments are picked up; sentences
// without an id get "<source>#<ordinal>".
//
// Malformed lines throw Error(kParse) with the line number; heads out of
// range, missing or multiple roots, and cycles throw Error(kStructural)
// naming the sentence id.
std::vector<ParsedSentence> ReadConllu(std::istream &in,
                                       std::string_view source = "conllu");

// Writes ten-column CoNLL-U; unused columns are "_". Root heads are written
// as 0.
void WriteConllu(std::ostream &out,
                 const std::vector<ParsedSentence> &sentences);

// Assigns char spans left to right. Whitespace in the text is skipped
// between tokens; each token's surface must then match the text exactly.
// Throws Error(kAlignment) with the first diverging text offset.
ParsedSentence AlignTokens(std::string_view sentence_text,
                           ParsedSentence parsed);

nlohmann::ordered_json ToJson(const ParsedSentence &s);
ParsedSentence ParsedSentenceFromJson(const nlohmann::json &j);

}  // namespace deontic::lingrep

#endif  // DEONTIC_LINGREP_PARSE_H_

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

// Compact builders for hand-written test fixtures.

#ifndef DEONTIC_TESTS_SUPPORT_FIXTURES_H_
#define DEONTIC_TESTS_SUPPORT_FIXTURES_H_

#include <sstream>
#include <string>
#include <vector>

#include "deontic/ingest/provision.h"
#include "deontic/lingrep/parse.h"
#include "deontic/text.h"

namespace deontic::testing {

// Rows are "FORM POS HEAD DEPREL" separated by ';'. HEAD is 1-based with 0
// for the root, as in CoNLL-U. Labels are used as given.
inline lingrep::ParsedSentence BuildParse(const std::string &id,
                                          const std::string &rows) {
  lingrep::ParsedSentence s;
  s.sentence_id = id;
  std::vector<std::string> forms;
  std::stringstream all(rows);
  std::string row;
  while (std::getline(all, row, ';')) {
    std::istringstream fields(row);
    lingrep::Token t;
    int head = 0;
    fields >> t.surface >> t.pos >> head >> t.deprel;
    t.index = static_cast<int>(s.tokens.size());
    t.head = head == 0 ? t.index : head - 1;
    if (head == 0) t.deprel = "ROOT";
    forms.push_back(t.surface);
    s.tokens.push_back(std::move(t));
  }
  s.text = text::Join(forms, " ");
  return s;
}

inline std::vector<ingest::AgentAlias> Aliases(
    const std::vector<std::string> &names) {
  std::vector<ingest::AgentAlias> out;
  for (const std::string &n : names) out.push_back({n, n, 1});
  return out;
}

}  // namespace deontic::testing

#endif  // DEONTIC_TESTS_SUPPORT_FIXTURES_H_

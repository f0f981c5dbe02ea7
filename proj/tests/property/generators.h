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

// Seeded random generators shared by the property tests.

#ifndef DEONTIC_TESTS_PROPERTY_GENERATORS_H_
#define DEONTIC_TESTS_PROPERTY_GENERATORS_H_

#include <random>
#include <string>
#include <vector>

#include "deontic/corpus/record.h"
#include "deontic/lingrep/parse.h"
#include "deontic/types.h"

namespace deontic::testing {

inline int Uniform(std::mt19937_64 &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

template <typename T>
const T &Pick(std::mt19937_64 &rng, const std::vector<T> &v) {
  return v[Uniform(rng, 0, int(v.size()) - 1)];
}

inline DeonticType RandomSpanType(std::mt19937_64 &rng) {
  return kSpanTypes[Uniform(rng, 0, kNumSpanTypes - 1)];
}

// Non-overlapping spans over n tokens.
inline std::vector<TypedSpan> RandomSpans(std::mt19937_64 &rng, int n) {
  std::vector<TypedSpan> spans;
  for (int i = 0; i < n;) {
    if (Uniform(rng, 0, 2) != 0) {
      ++i;
      continue;
    }
    int len = std::min(Uniform(rng, 1, 3), n - i);
    spans.push_back({RandomSpanType(rng), i, i + len - 1});
    i += len;
  }
  return spans;
}

// A random single-rooted tree: every token after the root attaches to a
// token already in the tree.
inline lingrep::ParsedSentence RandomTree(std::mt19937_64 &rng,
                                          const std::vector<std::string> &words,
                                          const std::vector<std::string> &labels,
                                          int n) {
  static const std::vector<std::string> kPos = {"VERB", "AUX", "NOUN", "PROPN",
                                                "ADP"};
  lingrep::ParsedSentence s;
  s.sentence_id = "r" + std::to_string(Uniform(rng, 0, 1 << 30));
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  s.tokens.resize(n);
  for (int i = 0; i < n; ++i) {
    lingrep::Token &t = s.tokens[i];
    t.index = i;
    t.surface = Pick(rng, words);
    t.pos = Pick(rng, kPos);
    t.deprel = Pick(rng, labels);
  }
  s.tokens[order[0]].head = order[0];
  s.tokens[order[0]].deprel = "ROOT";
  for (int k = 1; k < n; ++k) {
    s.tokens[order[k]].head = order[Uniform(rng, 0, k - 1)];
  }
  std::vector<std::string> forms;
  for (const auto &t : s.tokens) forms.push_back(t.surface);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    s.text += (i ? " " : "") + forms[i];
  }
  return s;
}

}  // namespace deontic::testing

#endif  // DEONTIC_TESTS_PROPERTY_GENERATORS_H_

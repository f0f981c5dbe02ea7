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

#include <sstream>

#include <gtest/gtest.h>

#include "deontic/lingrep/parse.h"
#include "generators.h"

namespace deontic::lingrep {
namespace {

using testing::Uniform;

TEST(LingrepProperty, ConlluRoundTrip) {
  std::mt19937_64 rng(201);
  const std::vector<std::string> words = {"Tenant", "shall", "pay", "rent", "to",
                                          "Landlord", "'s", "\"x\""};
  const std::vector<std::string> labels = {"nsubj", "aux", "obj", "obl", "case",
                                           "conj", "nsubj:pass"};
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<ParsedSentence> in;
    for (int k = Uniform(rng, 1, 3); k > 0; --k) {
      auto s = testing::RandomTree(rng, words, labels, Uniform(rng, 1, 12));
      s.tokens[s.Root()].deprel = "root";
      in.push_back(std::move(s));
    }
    std::ostringstream out;
    WriteConllu(out, in);
    std::istringstream back(out.str());
    auto read = ReadConllu(back, "mem");
    ASSERT_EQ(read, in);
    for (const auto &s : read) EXPECT_NO_THROW(ValidateTree(s));
    std::ostringstream again;
    WriteConllu(again, read);
    EXPECT_EQ(again.str(), out.str());
  }
}

TEST(LingrepProperty, AlignmentSpansSliceText) {
  std::mt19937_64 rng(202);
  const std::vector<std::string> words = {"Tenant", "shall", "pay", "(a)", "rent."};
  for (int iter = 0; iter < 300; ++iter) {
    auto s = testing::RandomTree(rng, words, {"dep"}, Uniform(rng, 1, 10));
    std::string text;
    for (const Token &t : s.tokens) {
      text += std::string(Uniform(rng, 0, 2), ' ') + t.surface;
    }
    auto aligned = AlignTokens(text, s);
    for (const Token &t : aligned.tokens) {
      ASSERT_TRUE(t.char_span);
      EXPECT_EQ(text.substr(t.char_span->begin, t.char_span->end - t.char_span->begin),
                t.surface);
    }
  }
}

}  // namespace
}  // namespace deontic::lingrep

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

#include "deontic/error.h"
#include "deontic/lingrep/constituency.h"
#include "deontic/lingrep/parse.h"

namespace deontic::lingrep {
namespace {

std::vector<ParsedSentence> Read(const std::string &text) {
  std::istringstream in(text);
  return ReadConllu(in, "test");
}

ErrorKind KindOf(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kInternal;
}

const char kTenantPays[] =
    "# sent_id = s1\n"
    "# text = Tenant pays\n"
    "1\tTenant\t_\tPROPN\t_\t_\t2\tnsubj\t_\t_\n"
    "2\tpays\t_\tVERB\t_\t_\t0\troot\t_\t_\n"
    "\n";

TEST(ReadConllu, TwoTokenSentence) {
  auto s = Read(kTenantPays);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].sentence_id, "s1");
  EXPECT_EQ(s[0].text, "Tenant pays");
  EXPECT_EQ(s[0].Root(), 1);
  EXPECT_EQ(s[0].tokens[0].head, 1);
  EXPECT_EQ(s[0].tokens[0].deprel, "nsubj");
  EXPECT_EQ(s[0].tokens[1].head, 1);
  EXPECT_EQ(s[0].Children(1), std::vector<int>{0});
}

TEST(ReadConllu, HeadOutOfRangeIsStructural) {
  EXPECT_EQ(KindOf([] {
              Read("1\tTenant\t_\tPROPN\t_\t_\t7\tnsubj\t_\t_\n"
                   "2\tpays\t_\tVERB\t_\t_\t0\troot\t_\t_\n\n");
            }),
            ErrorKind::kStructural);
}

TEST(ReadConllu, CycleNamesSentence) {
  try {
    Read("# sent_id = loop\n"
         "1\ta\t_\tX\t_\t_\t2\tdep\t_\t_\n"
         "2\tb\t_\tX\t_\t_\t1\tdep\t_\t_\n"
         "3\tc\t_\tX\t_\t_\t0\troot\t_\t_\n\n");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kStructural);
    EXPECT_NE(std::string(e.what()).find("loop"), std::string::npos);
  }
}

TEST(ReadConllu, MalformedLineCarriesLineNumber) {
  try {
    Read("# sent_id = x\n1\tTenant\t_\n\n");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
}

TEST(ReadConllu, SkipsRangesAndEmptyNodes) {
  auto s = Read(
      "1-2\tdon't\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "1\tdo\t_\tAUX\t_\t_\t3\taux\t_\t_\n"
      "2\tn't\t_\tPART\t_\t_\t3\tadvmod\t_\t_\n"
      "2.1\tx\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "3\tgo\t_\tVERB\t_\t_\t0\troot\t_\t_\n\n");
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].size(), 3);
  EXPECT_EQ(s[0].sentence_id, "test#0");
}

// Hand-drawn tree for "Tenant shall pay the rent to the Landlord".
TEST(ReadConllu, EightTokenFixture) {
  auto s = Read(
      "# sent_id = ex3a\n"
      "1\tTenant\t_\tPROPN\t_\t_\t3\tnsubj\t_\t_\n"
      "2\tshall\t_\tAUX\t_\t_\t3\taux\t_\t_\n"
      "3\tpay\t_\tVERB\t_\t_\t0\troot\t_\t_\n"
      "4\tthe\t_\tDET\t_\t_\t5\tdet\t_\t_\n"
      "5\trent\t_\tNOUN\t_\t_\t3\tobj\t_\t_\n"
      "6\tto\t_\tADP\t_\t_\t8\tcase\t_\t_\n"
      "7\tthe\t_\tDET\t_\t_\t8\tdet\t_\t_\n"
      "8\tLandlord\t_\tPROPN\t_\t_\t3\tobl\t_\t_\n\n");
  ASSERT_EQ(s.size(), 1u);
  const std::vector<std::tuple<std::string, std::string, int, std::string>>
      want = {{"Tenant", "PROPN", 2, "nsubj"}, {"shall", "AUX", 2, "aux"},
              {"pay", "VERB", 2, "root"},      {"the", "DET", 4, "det"},
              {"rent", "NOUN", 2, "obj"},      {"to", "ADP", 7, "case"},
              {"the", "DET", 7, "det"},        {"Landlord", "PROPN", 2, "obl"}};
  ASSERT_EQ(s[0].size(), 8);
  for (int i = 0; i < 8; ++i) {
    const Token &t = s[0].tokens[i];
    EXPECT_EQ(t.index, i);
    EXPECT_EQ(t.surface, std::get<0>(want[i]));
    EXPECT_EQ(t.pos, std::get<1>(want[i]));
    EXPECT_EQ(t.head, std::get<2>(want[i]));
    EXPECT_EQ(t.deprel, std::get<3>(want[i]));
  }
  EXPECT_EQ(s[0].Children(2), (std::vector<int>{0, 1, 4, 7}));
  NormalizeLabels(s[0], DefaultLabelMap());
  EXPECT_EQ(s[0].tokens[2].deprel, "ROOT");
  EXPECT_EQ(s[0].tokens[4].deprel, "dobj");
  EXPECT_EQ(s[0].tokens[7].deprel, "obl");
}

TEST(WriteConllu, RoundTrip) {
  auto s = Read(kTenantPays);
  std::ostringstream out;
  WriteConllu(out, s);
  EXPECT_EQ(Read(out.str()), s);
  EXPECT_NE(out.str().find("\t0\troot"), std::string::npos);
}

TEST(ValidateTree, RejectsTwoRoots) {
  ParsedSentence s;
  s.sentence_id = "two";
  s.tokens = {{0, "a", "X", 0, "ROOT", {}}, {1, "b", "X", 1, "ROOT", {}}};
  EXPECT_EQ(KindOf([&] { ValidateTree(s); }), ErrorKind::kStructural);
}

TEST(AlignTokens, ExactMatchCoversNonSpace) {
  auto s = AlignTokens("Tenant pays", Read(kTenantPays)[0]);
  EXPECT_EQ(s.tokens[0].char_span, (CharSpan{0, 6}));
  EXPECT_EQ(s.tokens[1].char_span, (CharSpan{7, 11}));
}

TEST(AlignTokens, DoubleSpacesAreSkipped) {
  auto s = AlignTokens("Tenant   pays", Read(kTenantPays)[0]);
  EXPECT_EQ(s.tokens[0].char_span, (CharSpan{0, 6}));
  EXPECT_EQ(s.tokens[1].char_span, (CharSpan{9, 13}));
}

TEST(AlignTokens, SurfaceMismatchReportsOffset) {
  ParsedSentence p;
  p.sentence_id = "d";
  p.tokens = {{0, "don't", "AUX", 0, "ROOT", {}}};
  try {
    AlignTokens("don ' t", p);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kAlignment);
    EXPECT_NE(std::string(e.what()).find("3"), std::string::npos);
  }
}

TEST(ParsedSentenceJson, RoundTrip) {
  auto s = AlignTokens("Tenant pays", Read(kTenantPays)[0]);
  s.complete = true;
  EXPECT_EQ(ParsedSentenceFromJson(nlohmann::json::parse(ToJson(s).dump())), s);
}

TEST(Completeness, Examples) {
  EXPECT_TRUE(IsCompleteSentence(std::string("(S (NP Tenant) (VP pays))")));
  EXPECT_FALSE(IsCompleteSentence(std::string("(NP (DT the) (NN rent))")));
  EXPECT_TRUE(IsCompleteSentence(
      std::string("(ROOT (S (NP (NNP Tenant)) (VP (VBZ pays))))")));
  EXPECT_TRUE(IsCompleteSentence(std::string("( (S (NP Tenant) (VP pays)))")));
  EXPECT_TRUE(IsCompleteSentence(std::string("(S-TPC (NP a) (VP b))")));
  EXPECT_FALSE(IsCompleteSentence(std::string("(ROOT (NP (NN rent)))")));
  EXPECT_TRUE(IsCompleteSentence(true));
  EXPECT_FALSE(IsCompleteSentence(false));
}

TEST(Completeness, UnbalancedIsParseError) {
  EXPECT_EQ(KindOf([] { ParseBracketed("(S (NP Tenant)"); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { ParseBracketed("(S x))"); }), ErrorKind::kParse);
}

TEST(Completeness, BracketedStructure) {
  Constituent c = ParseBracketed("(S (NP (NNP Tenant)) (VP (VBZ pays)))");
  EXPECT_EQ(c.label, "S");
  ASSERT_EQ(c.children.size(), 2u);
  EXPECT_EQ(c.children[0].label, "NP");
}

}  // namespace
}  // namespace deontic::lingrep

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

#include <gtest/gtest.h>

#include <map>

#include "deontic/error.h"
#include "deontic/ingest/aliases.h"
#include "deontic/ingest/filters.h"
#include "deontic/ingest/html.h"
#include "deontic/ingest/sentences.h"

namespace deontic::ingest {
namespace {

Provision P(int index, std::string text, int depth = 0,
            std::optional<int> parent = std::nullopt) {
  return {"c1", index, std::move(text), depth, parent};
}

CompletenessOracle Table(std::map<int, bool> flags) {
  return [flags](const Provision &p) -> std::optional<bool> {
    auto it = flags.find(p.index);
    if (it == flags.end()) return std::nullopt;
    return it->second;
  };
}

TEST(ExtractProvisions, ThreeSiblingParagraphs) {
  auto ps = ExtractProvisions("<p>One.</p><p>Two.</p><p>Three.</p>", "c1");
  ASSERT_EQ(ps.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(ps[i].index, i);
    EXPECT_EQ(ps[i].depth, 0);
    EXPECT_FALSE(ps[i].parent_index);
  }
  EXPECT_EQ(ps[1].text, "Two.");
}

TEST(ExtractProvisions, EmptyDocument) {
  EXPECT_TRUE(ExtractProvisions("", "c1").empty());
  EXPECT_TRUE(ExtractProvisions("<html><body></body></html>", "c1").empty());
}

TEST(ExtractProvisions, DivWithTwoParagraphChildren) {
  auto ps = ExtractProvisions(
      "<div>Article 1 <p>Rent is due.</p><p>Taxes are due.</p></div>", "c1");
  ASSERT_EQ(ps.size(), 3u);
  EXPECT_EQ(ps[0].text, "Article 1");
  EXPECT_EQ(ps[0].depth, 0);
  for (int i : {1, 2}) {
    EXPECT_EQ(ps[i].depth, 1);
    EXPECT_EQ(ps[i].parent_index, 0);
  }
}

TEST(ExtractProvisions, NormalizesAndDropsScripts) {
  auto ps = ExtractProvisions(
      "<script>var x = '<p>no</p>';</script><!-- <p>no</p> -->"
      "<p>A&amp;B \n\t  <b>bold</b>&#160;x</p><p>unclosed<p>next",
      "c1");
  ASSERT_EQ(ps.size(), 3u);
  EXPECT_EQ(ps[0].text, "A&B bold x");
  EXPECT_EQ(ps[1].text, "unclosed");
  EXPECT_EQ(ps[2].text, "next");
}

TEST(ExtractProvisions, MissingFileIsIngestError) {
  try {
    ExtractProvisionsFromFile("/nonexistent/contract.html", "c1");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIngest);
    EXPECT_NE(std::string(e.what()).find("contract.html"), std::string::npos);
  }
}

TEST(FilterDefinitions, ShallMeanIsRemoved) {
  auto r = FilterDefinitions({P(0, "\"Premises\" shall mean Suite 100.")});
  EXPECT_TRUE(r.kept.empty());
  ASSERT_EQ(r.discarded.size(), 1u);
  EXPECT_EQ(r.discarded[0].cue, "shall mean");
}

TEST(FilterDefinitions, NoCueIsKept) {
  std::vector<Provision> in = {P(0, "Tenant shall pay rent.")};
  auto r = FilterDefinitions(in);
  EXPECT_EQ(r.kept, in);
  EXPECT_TRUE(r.discarded.empty());
}

TEST(FilterDefinitions, WordBoundaryMeansIsRemovedAndReported) {
  auto r = FilterDefinitions(
      {P(0, "Tenant shall repair by all means necessary."),
       P(1, "Rent is meaningful.")});
  ASSERT_EQ(r.discarded.size(), 1u);
  EXPECT_EQ(r.discarded[0].provision.index, 0);
  EXPECT_EQ(r.discarded[0].cue, "means");
  ASSERT_EQ(r.kept.size(), 1u);
  EXPECT_EQ(r.kept[0].index, 1);
}

TEST(MergeBullets, TheFollowingWithIncompleteChild) {
  auto out = MergeBullets({P(0, "Tenant shall provide the following:"),
                           P(1, "(a) proof of insurance", 1, 0)},
                          Table({{0, false}, {1, false}}));
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].text, "Tenant shall provide (a) proof of insurance");
}

TEST(MergeBullets, NoChildrenUnchanged) {
  std::vector<Provision> in = {P(0, "Tenant shall pay rent."),
                               P(1, "Landlord shall repair.")};
  EXPECT_EQ(MergeBullets(in, Table({})), in);
}

TEST(MergeBullets, ColonParentWithCompleteChildKeepsColon) {
  auto out = MergeBullets({P(0, "Landlord agrees that:"),
                           P(1, "(a) Tenant may keep a dog.", 1, 0)},
                          Table({{0, false}, {1, true}}));
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].text, "Landlord agrees that: (a) Tenant may keep a dog.");
}

TEST(CombineBullet, RuleNumbers) {
  auto rule = [](const std::string &parent, const std::string &child,
                 bool parent_complete, bool child_complete) {
    Provision p = P(0, parent), c = P(1, child, 1, 0);
    auto r = CombineBullet(p, p.text, c,
                           Table({{0, parent_complete}, {1, child_complete}}));
    return r ? r->rule : 0;
  };
  EXPECT_EQ(rule("Tenant shall maintain insurance.", "(a) with a rider", true,
                 false),
            1);
  EXPECT_EQ(rule("Tenant shall", "(a) pay rent.", false, true), 2);
  EXPECT_EQ(rule("Tenant shall provide the following:", "(a) A bond.", false,
                 true),
            3);
  EXPECT_EQ(rule("Landlord agrees that:", "(a) Rent is due.", false, true), 4);
  EXPECT_EQ(rule("Landlord agrees.", "(a) Rent is due.", true, true), 0);
}

TEST(MergeBullets, MissingCompletenessIsConfigError) {
  try {
    MergeBullets({P(0, "Landlord shall"), P(1, "(a) Repair.", 1, 0)},
                 Table({}));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kConfig);
  }
}

TEST(HeuristicCompleteness, SentenceShape) {
  auto h = HeuristicCompleteness();
  EXPECT_EQ(h(P(0, "(a) Tenant shall pay rent.")), true);
  EXPECT_EQ(h(P(0, "(a) proof of insurance")), false);
  EXPECT_EQ(h(P(0, "Done.")), false);
}

TEST(DetectContractType, LeaseOnSecondProvision) {
  EXPECT_EQ(DetectContractType({P(0, "Table of Contents"),
                                P(1, "LEASE AGREEMENT")}),
            "lease");
}

TEST(DetectContractType, NoAllCapsAgreementIsUnknown) {
  EXPECT_EQ(DetectContractType({P(0, "Lease Agreement"), P(1, "Rent.")}),
            std::nullopt);
}

TEST(DetectContractType, OutsideWindowIsUnknown) {
  std::vector<Provision> ps;
  for (int i = 0; i < 25; ++i) ps.push_back(P(i, "Clause " + std::to_string(i)));
  ps.push_back(P(25, "EMPLOYMENT AGREEMENT"));
  EXPECT_EQ(DetectContractType(ps), std::nullopt);
}

TEST(Aliases, ParentheticalAfterCompany) {
  std::string t = "This Lease is between ACME Corp. (\"Lessor\") and others.";
  std::size_t b = t.find("ACME");
  AliasConfig cfg;
  cfg.min_frequency = 1;
  auto sel = ExtractAliases({P(0, t)},
                            {{0, b, b + 10, EntityKind::kCompany}}, cfg);
  ASSERT_EQ(sel.aliases.size(), 1u);
  EXPECT_EQ(sel.aliases[0].alias, "Lessor");
  EXPECT_EQ(sel.aliases[0].canonical_group, "Landlord");
}

TEST(Aliases, MentionWithoutParentheticalGivesNothing) {
  std::string t = "ACME Corp. will lease the building.";
  AliasConfig cfg;
  cfg.min_frequency = 1;
  auto sel =
      ExtractAliases({P(0, t)}, {{0, 0, 10, EntityKind::kCompany}}, cfg);
  EXPECT_TRUE(sel.aliases.empty());
}

TEST(Aliases, FrequencyThreshold) {
  std::string a = "ACME Corp. (\"Lessee\") signs.";
  std::string b = "Beta LLC (\"Lessee\") and Gamma Inc. (\"Guarantor\") sign.";
  std::size_t g = b.find("Gamma");
  auto sel = ExtractAliases(
      {P(0, a), P(1, b)},
      {{0, 0, 10, EntityKind::kCompany},
       {1, 0, 8, EntityKind::kCompany},
       {1, g, g + 10, EntityKind::kCompany}},
      AliasConfig{});
  ASSERT_EQ(sel.aliases.size(), 1u);
  EXPECT_EQ(sel.aliases[0].alias, "Lessee");
  EXPECT_EQ(sel.aliases[0].frequency, 2);
}

TEST(Aliases, FallbackMentionsFindCompanies) {
  std::string t = "Acme Properties LLC (the \"Landlord\") leases to Bob.";
  auto mentions = FallbackEntityMentions({P(0, t)});
  ASSERT_FALSE(mentions.empty());
  EXPECT_EQ(t.substr(mentions[0].begin, mentions[0].end - mentions[0].begin),
            "Acme Properties LLC");
}

TEST(SegmentSentences, TwoSentences) {
  auto rs = SegmentSentences(
      P(3, "Tenant shall pay rent. Tenant shall keep the Premises clean."));
  ASSERT_EQ(rs.size(), 2u);
  EXPECT_EQ(rs[0].text, "Tenant shall pay rent. ");
  EXPECT_EQ(rs[0].end, rs[1].begin);
  EXPECT_EQ(rs[1].text, "Tenant shall keep the Premises clean.");
  EXPECT_EQ(rs[0].sentence_id, "c1:3:0");
  EXPECT_EQ(rs[1].sentence_id, "c1:3:1");
}

TEST(SegmentSentences, AbbreviationProtected) {
  auto rs = SegmentSentences(P(0, "Rent is due under Lease No. 5 each month."));
  EXPECT_EQ(rs.size(), 1u);
}

TEST(SegmentSentences, EmptyProvision) {
  EXPECT_TRUE(SegmentSentences(P(0, "")).empty());
}

TEST(ExpandPerAgent, TwoAgents) {
  SentenceRecord s{"c1:0:0", "c1", 0, "Tenant shall pay the rent to the Landlord.",
                   0, 42};
  std::vector<AgentAlias> aliases = {{"Tenant", "Tenant", 3},
                                     {"Landlord", "Landlord", 3}};
  auto out = ExpandPerAgent(s, aliases);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].agent.alias, "Tenant");
  EXPECT_EQ(out[1].agent.alias, "Landlord");
}

TEST(ExpandPerAgent, AgentlessSentence) {
  SentenceRecord s{"c1:0:0", "c1", 0,
                   "Any such month-to-month tenancy shall be subject to every "
                   "other term of this Lease.",
                   0, 0};
  EXPECT_TRUE(
      ExpandPerAgent(s, {{"Tenant", "Tenant", 3}, {"Landlord", "Landlord", 3}})
          .empty());
}

TEST(ExpandPerAgent, RepeatedAliasOnce) {
  SentenceRecord s{"c1:0:0", "c1", 0, "Tenant shall notify Landlord if Tenant moves.",
                   0, 0};
  auto out = ExpandPerAgent(s, {{"Tenant", "Tenant", 3}});
  EXPECT_EQ(out.size(), 1u);
}

TEST(IngestJson, RoundTrip) {
  Provision p = P(4, "Text", 1, 2);
  EXPECT_EQ(ProvisionFromJson(ToJson(p)), p);
  AgentAlias a{"Lessee", "Tenant", 7};
  EXPECT_EQ(AgentAliasFromJson(ToJson(a)), a);
  SentenceRecord s{"c1:4:0", "c1", 4, "Text", 0, 4};
  EXPECT_EQ(SentenceRecordFromJson(ToJson(s)), s);
  AgentSentence as{"c1:4:0", a, "Lessee pays."};
  EXPECT_EQ(AgentSentenceFromJson(ToJson(as)), as);
}

}  // namespace
}  // namespace deontic::ingest

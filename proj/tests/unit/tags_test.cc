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

#include "deontic/error.h"
#include "deontic/rules/baselines.h"
#include "deontic/rules/tags.h"

namespace deontic::rules {
namespace {

using T = DeonticType;

TEST(SpansToTags, WorkedExample) {
  auto tags = SpansToTags({{T::kObl, 1, 3}}, 7);
  EXPECT_EQ(TagStrings(tags), (std::vector<std::string>{
                                  "O", "B-OBL", "I-OBL", "I-OBL", "O", "O", "O"}));
  EXPECT_EQ(TagsToSpans(tags), (std::vector<TypedSpan>{{T::kObl, 1, 3}}));
}

TEST(SpansToTags, EmptyIsAllO) {
  EXPECT_EQ(TagStrings(SpansToTags({}, 3)),
            (std::vector<std::string>{"O", "O", "O"}));
  EXPECT_TRUE(SpansToTags({}, 0).empty());
}

TEST(SpansToTags, SingleTokenIsS) {
  EXPECT_EQ(TagStrings(SpansToTags({{T::kNent, 0, 0}}, 1)),
            std::vector<std::string>{"S-NENT"});
}

TEST(SpansToTags, Errors) {
  auto kind = [](std::vector<TypedSpan> spans, int n) {
    try {
      SpansToTags(spans, n);
    } catch (const Error &e) {
      return e.kind();
    }
    return ErrorKind::kInternal;
  };
  EXPECT_EQ(kind({{T::kObl, 0, 2}, {T::kPer, 2, 3}}, 5), ErrorKind::kValidation);
  EXPECT_EQ(kind({{T::kObl, 3, 5}}, 5), ErrorKind::kValidation);
  EXPECT_EQ(kind({{T::kNone, 0, 0}}, 5), ErrorKind::kValidation);
  try {
    SpansToTags({{T::kObl, 0, 2}, {T::kPer, 2, 3}}, 5);
  } catch (const Error &e) {
    std::string what = e.what();
    EXPECT_NE(what.find("Obl"), std::string::npos) << what;
    EXPECT_NE(what.find("Per"), std::string::npos) << what;
  }
}

TEST(Tags, ParseAndValidity) {
  EXPECT_EQ(ParseTag("S-NOBL"), (Tag{TagKind::kS, T::kNobl}));
  EXPECT_EQ(ParseTag("O"), Tag::O());
  EXPECT_FALSE(ParseTag("X-OBL").has_value());
  EXPECT_FALSE(ParseTag("B-NONE").has_value());
  EXPECT_TRUE(IsValidTagSequence(ParseTags({"O", "B-OBL", "I-OBL", "S-PER"})));
  EXPECT_FALSE(IsValidTagSequence(ParseTags({"O", "I-OBL"})));
  EXPECT_FALSE(IsValidTagSequence(ParseTags({"B-OBL", "O"})));
  EXPECT_FALSE(IsValidTagSequence(ParseTags({"B-OBL", "I-PER"})));
  try {
    ParseTagOrThrow("Z");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kValidation);
  }
}

TEST(Tags, EraseTypes) {
  auto erased = EraseTypes(ParseTags({"B-PER", "I-PER", "S-NENT", "O"}));
  EXPECT_EQ(TagStrings(erased),
            (std::vector<std::string>{"B-OBL", "I-OBL", "S-OBL", "O"}));
}

TEST(MajorityType, TieGoesToEnumOrder) {
  TypeCounts c{};
  c[int(T::kPer)] = 4;
  c[int(T::kEnt)] = 4;
  EXPECT_EQ(MajorityType(c), T::kEnt);
  try {
    MajorityType(TypeCounts{});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kConfig);
  }
}

TEST(MajorityClassBaseline, PerGroup) {
  MajorityClassBaseline b;
  b.Add("Tenant", {T::kObl, T::kPro});
  b.Add("Tenant", {T::kObl});
  b.Add("Landlord", {T::kEnt});
  b.Add("Landlord", {T::kNone});
  EXPECT_EQ(b.Predict("Tenant"), LabelSet{T::kObl});
  EXPECT_EQ(b.Predict("Landlord"), LabelSet{T::kEnt});
  EXPECT_THROW(b.Predict("Guarantor"), Error);
}

TEST(MajoritySpanBaseline, Examples) {
  EXPECT_EQ(TagStrings(MajoritySpanBaseline({"Tenant", "shall", "pay"}, "Tenant")),
            (std::vector<std::string>{"O", "S-OBL", "O"}));
  EXPECT_EQ(TagStrings(MajoritySpanBaseline({"Landlord", "may", "enter"},
                                            "Landlord")),
            (std::vector<std::string>{"O", "O", "O"}));
  EXPECT_EQ(TagStrings(MajoritySpanBaseline(
                {"Landlord", "Shall", "repair", "and", "shall", "pay"},
                "Landlord")),
            (std::vector<std::string>{"O", "S-ENT", "O", "O", "S-ENT", "O"}));
  try {
    MajoritySpanBaseline({"shall"}, "Guarantor");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kConfig);
  }
}

}  // namespace
}  // namespace deontic::rules

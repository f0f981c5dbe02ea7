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
#include "deontic/io.h"
#include "deontic/text.h"
#include "deontic/types.h"

namespace deontic {
namespace {

TEST(Text, CaseAndWhitespace) {
  EXPECT_EQ(text::Lower("Tenant SHALL"), "tenant shall");
  EXPECT_EQ(text::Upper("tenant"), "TENANT");
  EXPECT_EQ(text::Lower("Caf\xc3\xa9"), "caf\xc3\xa9");
  EXPECT_EQ(text::CollapseWhitespace("  a \t\n b\xc2\xa0" "c  "), "a b c");
  EXPECT_EQ(text::Trim("  x y "), "x y");
  EXPECT_EQ(text::SplitWords(" a  b\tc "), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(text::Join({"a", "b"}, "--"), "a--b");
}

TEST(Text, WordSearch) {
  EXPECT_EQ(text::FindWord("The Tenant's duty", "tenant"), 4u);
  EXPECT_FALSE(text::ContainsWord("Subtenant shall", "tenant"));
  EXPECT_TRUE(text::ContainsWord("by all means necessary", "MEANS"));
  EXPECT_TRUE(text::ContainsIgnoreCase("PREMISES", "mis"));
  EXPECT_TRUE(text::StartsWith("(a) x", "(a"));
  EXPECT_TRUE(text::EndsWith("below:", ":"));
}

TEST(Types, NamesAndParsing) {
  EXPECT_EQ(TypeName(DeonticType::kNent), "Nent");
  EXPECT_EQ(TagSuffix(DeonticType::kNobl), "NOBL");
  EXPECT_EQ(ParseType("obl"), DeonticType::kObl);
  EXPECT_EQ(ParseType("PRO"), DeonticType::kPro);
  EXPECT_EQ(ParseType("no obligation"), DeonticType::kNobl);
  EXPECT_EQ(ParseType("entitlement"), DeonticType::kEnt);
  EXPECT_FALSE(ParseType("maybe").has_value());
  try {
    ParseTypeOrThrow("maybe");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kValidation);
    EXPECT_EQ(e.module(), "types");
  }
}

TEST(Types, LabelSetValidity) {
  EXPECT_TRUE(IsValidLabelSet({DeonticType::kNone}));
  EXPECT_TRUE(IsValidLabelSet({DeonticType::kObl, DeonticType::kPer}));
  EXPECT_FALSE(IsValidLabelSet({}));
  EXPECT_FALSE(IsValidLabelSet({DeonticType::kNone, DeonticType::kObl}));
  EXPECT_EQ(LabelNames({DeonticType::kPer, DeonticType::kObl}),
            (std::vector<std::string>{"Obl", "Per"}));
}

TEST(Types, SpanOrderAndOverlap) {
  std::vector<TypedSpan> s = {{DeonticType::kPer, 3, 4},
                              {DeonticType::kObl, 1, 1},
                              {DeonticType::kObl, 1, 2}};
  SortSpans(s);
  EXPECT_EQ(s[0], (TypedSpan{DeonticType::kObl, 1, 1}));
  EXPECT_EQ(s[2], (TypedSpan{DeonticType::kPer, 3, 4}));
  EXPECT_TRUE(s[1].Overlaps({DeonticType::kEnt, 2, 5}));
  EXPECT_FALSE(s[0].Overlaps({DeonticType::kEnt, 2, 5}));
  EXPECT_EQ(s[2].length(), 2);
}

TEST(Error, WhatCarriesKindAndModule) {
  Error e(ErrorKind::kDependency, "cli", "missing");
  EXPECT_EQ(std::string(e.what()), "dependency error [cli]: missing");
  EXPECT_EQ(ErrorKindName(ErrorKind::kStructural), "structural error");
}

TEST(Io, JsonLines) {
  std::istringstream in("{\"a\":1}\n\n{\"a\":2}\n");
  auto rows = io::ReadJsonLines(in, "mem");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1]["a"], 2);
  std::istringstream bad("{\"a\":1}\n{oops\n");
  try {
    io::ReadJsonLines(bad, "mem");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
  std::ostringstream out;
  nlohmann::ordered_json j;
  j["z"] = 1;
  j["a"] = "x";
  io::WriteJsonLine(out, j);
  EXPECT_EQ(out.str(), "{\"z\":1,\"a\":\"x\"}\n");
}

TEST(Io, Sha256) {
  EXPECT_EQ(io::Sha256Hex(""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(io::Sha256Hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Io, MissingFileIsIngestError) {
  try {
    io::ReadFile("/nonexistent/deontic/file");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIngest);
    EXPECT_NE(std::string(e.what()).find("/nonexistent/deontic/file"),
              std::string::npos);
  }
}

}  // namespace
}  // namespace deontic

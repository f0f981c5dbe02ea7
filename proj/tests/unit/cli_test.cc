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

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "commands.h"
#include "deontic/io.h"

namespace deontic::tools {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("deontic_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int Run(std::vector<std::string> args, std::string *err = nullptr) {
    args.insert(args.begin(), "deontic");
    std::vector<char *> argv;
    for (std::string &a : args) argv.push_back(a.data());
    ::testing::internal::CaptureStderr();
    ::testing::internal::CaptureStdout();
    int code = Main(static_cast<int>(argv.size()), argv.data());
    std::string e = ::testing::internal::GetCapturedStderr();
    ::testing::internal::GetCapturedStdout();
    if (err) *err = e;
    return code;
  }

  std::string Write(const std::string &name, const std::string &content) {
    fs::path p = dir_ / name;
    io::WriteFile(p, content);
    return p.string();
  }

  fs::path dir_;
};

const char kGold[] =
    R"({"sentence_id":"c:1:0","agent":"Tenant","labels":["Obl"],"spans":[{"type":"Obl","start":1,"end":1}],"tokens":["Tenant","shall","pay"]})"
    "\n"
    R"({"sentence_id":"c:1:0","agent":"Landlord","labels":["None"],"spans":[],"tokens":["Tenant","shall","pay"]})"
    "\n"
    R"({"sentence_id":"c:2:0","agent":"Landlord","labels":["Per","Pro"],"spans":[{"type":"Per","start":0,"end":0},{"type":"Pro","start":2,"end":3}],"tokens":["Landlord","may","not","enter"]})"
    "\n";

TEST_F(CliTest, EvaluateClsPerfectPredictions) {
  std::string gold = Write("gold.jsonl", kGold);
  std::string out = (dir_ / "out").string();
  ASSERT_EQ(Run({"--out", out, "evaluate", "cls", "--pred", gold, "--gold", gold}), 0);
  auto report = nlohmann::json::parse(io::ReadFile(fs::path(out) / "eval_cls.json"));
  EXPECT_EQ(report["rows"]["Both"]["accuracy"], 1.0);
  EXPECT_EQ(report["rows"]["Tenant"]["accuracy"], 1.0);
  EXPECT_EQ(report["rows"]["Both"]["macro"]["f1"], 1.0);
  EXPECT_TRUE(report.contains("manifest"));
  EXPECT_TRUE(report.contains("seed"));
  EXPECT_TRUE(fs::exists(fs::path(out) / "evaluate-cls.manifest.json"));
}

TEST_F(CliTest, EvaluateSpanPerfectPredictions) {
  std::string gold = Write("gold.jsonl", kGold);
  std::string out = (dir_ / "out").string();
  ASSERT_EQ(Run({"--out", out, "evaluate", "span", "--pred", gold, "--gold", gold}), 0);
  auto report = nlohmann::json::parse(io::ReadFile(fs::path(out) / "eval_span.json"));
  for (const char *mode : {"labeled", "unlabeled"}) {
    const auto &both = report["rows"]["Both"][mode];
    EXPECT_EQ(both["macro"]["f1"], 1.0) << mode;
    EXPECT_EQ(both["micro"]["f1"], 1.0) << mode;
  }
}

TEST_F(CliTest, ExtractWithoutParsesIsDependencyError) {
  std::string err;
  EXPECT_EQ(Run({"--out", dir_.string(), "extract", "--pairs",
                 Write("pairs.jsonl", "")},
                &err),
            3);
  EXPECT_NE(err.find("parses.jsonl"), std::string::npos) << err;
  EXPECT_NE(err.find("parse-import"), std::string::npos) << err;
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_NE(Run({"no-such-command"}), 0);
  EXPECT_NE(Run({"evaluate", "cls", "--no-such-flag"}), 0);
  EXPECT_NE(Run({}), 0);
  EXPECT_EQ(Run({"--help"}), 0);
}

TEST_F(CliTest, MissingConfigFile) {
  std::string gold = Write("gold.jsonl", kGold);
  std::string err;
  EXPECT_EQ(Run({"--config", (dir_ / "absent.json").string(), "--out", dir_.string(),
                 "evaluate", "cls", "--pred", gold, "--gold", gold},
                &err),
            1);
  EXPECT_NE(err.find("config"), std::string::npos) << err;
}

TEST_F(CliTest, SameSeedSameArtifacts) {
  std::string gold = Write("gold.jsonl", kGold);
  for (std::string run : {"a", "b"}) {
    ASSERT_EQ(Run({"--seed", "5", "--out", (dir_ / run).string(), "export",
                   "--corpus", gold, "--anonymize", "random"}),
              0);
  }
  EXPECT_EQ(io::ReadFile(dir_ / "a" / "export.jsonl"),
            io::ReadFile(dir_ / "b" / "export.jsonl"));
  auto first = nlohmann::json::parse(
      io::ReadFile(dir_ / "a" / "export.manifest.json"));
  EXPECT_EQ(first["seed"], 5);
}

}  // namespace
}  // namespace deontic::tools

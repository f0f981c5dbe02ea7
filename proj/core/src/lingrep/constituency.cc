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

#include "deontic/lingrep/constituency.h"

#include "deontic/error.h"
#include "deontic/io.h"
#include "deontic/text.h"

namespace deontic::lingrep {

namespace {

class BracketParser {
 public:
  explicit BracketParser(std::string_view s) : s_(s) {}

  Constituent ParseTop() {
    SkipSpace();
    Constituent tree = ParseNode();
    SkipSpace();
    if (pos_ != s_.size()) Fail("trailing input");
    return tree;
  }

 private:
  [[noreturn]] void Fail(const std::string &what) const {
    throw Error(ErrorKind::kParse, "lingrep",
                "bracketed tree: " + what + " at offset " +
                    std::to_string(pos_));
  }

  void SkipSpace() {
    while (pos_ < s_.size() && text::IsSpace(s_[pos_])) ++pos_;
  }

  std::string Atom() {
    std::size_t b = pos_;
    while (pos_ < s_.size() && !text::IsSpace(s_[pos_]) && s_[pos_] != '(' &&
           s_[pos_] != ')') {
      ++pos_;
    }
    return std::string(s_.substr(b, pos_ - b));
  }

  Constituent ParseNode() {
    if (pos_ >= s_.size() || s_[pos_] != '(') Fail("expected '('");
    ++pos_;
    SkipSpace();
    Constituent node;
    node.label = Atom();
    for (;;) {
      SkipSpace();
      if (pos_ >= s_.size()) Fail("unbalanced brackets");
      if (s_[pos_] == ')') {
        ++pos_;
        return node;
      }
      if (s_[pos_] == '(') {
        node.children.push_back(ParseNode());
      } else {
        std::string word = Atom();
        node.word = node.word.empty() ? word : node.word + " " + word;
      }
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string BaseLabel(const std::string &label) {
  std::size_t cut = label.find_first_of("-=");
  // Labels like "-NONE-" start with the separator and have no base.
  if (cut == 0 || cut == std::string::npos) return label;
  return label.substr(0, cut);
}

}  // namespace

Constituent ParseBracketed(std::string_view bracketed) {
  return BracketParser(bracketed).ParseTop();
}

bool IsCompleteSentence(const Completeness &source) {
  if (const bool *flag = std::get_if<bool>(&source)) return *flag;
  Constituent root = ParseBracketed(std::get<std::string>(source));
  std::string label = BaseLabel(root.label);
  if (label == "S") return true;
  if (label.empty() || label == "ROOT" || label == "TOP") {
    for (const Constituent &child : root.children) {
      if (BaseLabel(child.label) == "S") return true;
    }
  }
  return false;
}

std::map<std::string, bool> ReadCompletenessSidecar(
    const std::filesystem::path &path) {
  std::map<std::string, bool> table;
  int line = 0;
  for (const nlohmann::json &j : io::ReadJsonLinesFile(path)) {
    ++line;
    auto fail = [&](const std::string &what) {
      throw Error(ErrorKind::kParse, "lingrep",
                  path.string() + ":" + std::to_string(line) + ": " + what);
    };
    if (!j.is_object() || !j.contains("provision_key") ||
        !j["provision_key"].is_string()) {
      fail("missing string field 'provision_key'");
    }
    bool complete = false;
    if (j.contains("complete") && j["complete"].is_boolean()) {
      complete = j["complete"].get<bool>();
    } else if (j.contains("tree") && j["tree"].is_string()) {
      complete = IsCompleteSentence(j["tree"].get<std::string>());
    } else {
      fail("needs boolean 'complete' or string 'tree'");
    }
    table[j["provision_key"].get<std::string>()] = complete;
  }
  return table;
}

}  // namespace deontic::lingrep

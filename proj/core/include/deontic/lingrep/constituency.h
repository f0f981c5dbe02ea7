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

#ifndef DEONTIC_LINGREP_CONSTITUENCY_H_
#define DEONTIC_LINGREP_CONSTITUENCY_H_

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace deontic::lingrep {

// A Penn-style bracketed tree.
struct Constituent {
  std::string label;  // empty for an unlabeled wrapper "( (S ...))"
  std::string word;   // set on preterminals' leaves
  std::vector<Constituent> children;
};

// Parses "(S (NP (NNP Tenant)) (VP (VBZ pays)))". Throws Error(kParse) on
// unbalanced brackets or trailing input.
Constituent ParseBracketed(std::string_view bracketed);

// A completeness source: a bracketed tree or a precomputed flag.
using Completeness = std::variant<std::string, bool>;

// True iff the root label is S, or the root is a wrapper (ROOT, TOP or
// unlabeled) with a top-level child labelled S. Function tags are ignored
// ("S-TPC" counts as S).
bool IsCompleteSentence(const Completeness &source);

// Completeness sidecar: line-delimited {"provision_key": ..., "complete":
// ...}; "complete" may also be given as a bracketed "tree" string.
std::map<std::string, bool> ReadCompletenessSidecar(
    const std::filesystem::path &path);

}  // namespace deontic::lingrep

#endif  // DEONTIC_LINGREP_CONSTITUENCY_H_

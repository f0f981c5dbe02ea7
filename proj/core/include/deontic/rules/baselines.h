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

// Majority baselines for classification and span tagging.

#ifndef DEONTIC_RULES_BASELINES_H_
#define DEONTIC_RULES_BASELINES_H_

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "deontic/rules/tags.h"
#include "deontic/types.h"

namespace deontic::rules {

// Label counts indexed by DeonticType, None included.
using TypeCounts = std::array<long long, kNumDeonticTypes>;

// The most frequent type; ties go to the earliest in enum order. Throws
// Error(kConfig) when every count is zero.
DeonticType MajorityType(const TypeCounts &counts);

class MajorityClassBaseline {
 public:
  // Each label of a training record adds one to its group's count.
  void Add(const std::string &group, const LabelSet &labels);

  // {MajorityType} for the group. Throws Error(kConfig) for groups with no
  // training data.
  LabelSet Predict(const std::string &group) const;

  const std::map<std::string, TypeCounts> &counts() const { return counts_; }

 private:
  std::map<std::string, TypeCounts> counts_;
};

// Agent group -> type tagged on "shall".
using ShallTypeMap = std::map<std::string, DeonticType, std::less<>>;

// Tenant -> Obl, Landlord -> Ent.
const ShallTypeMap &DefaultShallTypes();

// S-<type> on every case-insensitive "shall", O elsewhere. Throws
// Error(kConfig) when the group is not in `types`.
TagSequence MajoritySpanBaseline(const std::vector<std::string> &tokens,
                                 std::string_view group,
                                 const ShallTypeMap &types = DefaultShallTypes());

}  // namespace deontic::rules

#endif  // DEONTIC_RULES_BASELINES_H_

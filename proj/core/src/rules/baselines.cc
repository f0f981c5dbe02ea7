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

#include "deontic/rules/baselines.h"

#include "deontic/error.h"
#include "deontic/text.h"

namespace deontic::rules {

DeonticType MajorityType(const TypeCounts &counts) {
  int best = -1;
  for (int i = 0; i < kNumDeonticTypes; ++i) {
    if (counts[i] > 0 && (best < 0 || counts[i] > counts[best])) best = i;
  }
  if (best < 0) {
    throw Error(ErrorKind::kConfig, "rules",
                "majority baseline needs a non-empty label distribution");
  }
  return static_cast<DeonticType>(best);
}

void MajorityClassBaseline::Add(const std::string &group,
                                const LabelSet &labels) {
  auto [it, inserted] = counts_.try_emplace(group);
  if (inserted) it->second.fill(0);
  for (DeonticType t : labels) ++it->second[static_cast<int>(t)];
}

LabelSet MajorityClassBaseline::Predict(const std::string &group) const {
  auto it = counts_.find(group);
  if (it == counts_.end()) {
    throw Error(ErrorKind::kConfig, "rules",
                "no training distribution for agent group '" + group + "'");
  }
  return {MajorityType(it->second)};
}

const ShallTypeMap &DefaultShallTypes() {
  static const auto *types = new ShallTypeMap{
      {"Tenant", DeonticType::kObl},
      {"Landlord", DeonticType::kEnt},
  };
  return *types;
}

TagSequence MajoritySpanBaseline(const std::vector<std::string> &tokens,
                                 std::string_view group,
                                 const ShallTypeMap &types) {
  auto it = types.find(group);
  if (it == types.end()) {
    throw Error(ErrorKind::kConfig, "rules",
                "no majority span type for agent group '" +
                    std::string(group) + "'");
  }
  TagSequence tags(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (text::EqualsIgnoreCase(tokens[i], "shall")) {
      tags[i] = {TagKind::kS, it->second};
    }
  }
  return tags;
}

}  // namespace deontic::rules

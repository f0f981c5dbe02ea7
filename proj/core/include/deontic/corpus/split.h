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

#ifndef DEONTIC_CORPUS_SPLIT_H_
#define DEONTIC_CORPUS_SPLIT_H_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "deontic/corpus/record.h"

namespace deontic::corpus {

struct SplitConfig {
  // Target share of records per split (train, dev, test). Splits with a
  // zero ratio receive no contracts.
  std::array<double, kNumSplits> ratios = {0.7, 0.1, 0.2};
  std::map<std::string, Split> pinned;  // contract_id -> split
  std::uint64_t seed = 0;
};

// Whole contracts are assigned to splits. Unpinned contracts are shuffled
// with the seed, ordered by record count (largest first) and each goes to
// the split furthest below its target. Throws Error(kUsage) when there are
// fewer contracts than splits with a positive ratio.
std::map<std::string, Split> SplitByContract(
    const std::vector<AnnotationRecord> &records, const SplitConfig &config);

// Copies `records` with their split field set from `assignment`.
std::vector<AnnotationRecord> ApplySplits(
    const std::vector<AnnotationRecord> &records,
    const std::map<std::string, Split> &assignment);

}  // namespace deontic::corpus

#endif  // DEONTIC_CORPUS_SPLIT_H_

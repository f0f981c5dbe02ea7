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

#include "deontic/corpus/split.h"

#include <algorithm>
#include <random>

#include "deontic/error.h"

namespace deontic::corpus {

std::map<std::string, Split> SplitByContract(
    const std::vector<AnnotationRecord> &records, const SplitConfig &config) {
  std::map<std::string, long long> sizes;
  for (const AnnotationRecord &r : records) ++sizes[r.contract_id];

  int active = 0;
  double ratio_sum = 0.0;
  for (double ratio : config.ratios) {
    if (ratio < 0) {
      throw Error(ErrorKind::kConfig, "corpus", "split ratios must be >= 0");
    }
    active += ratio > 0;
    ratio_sum += ratio;
  }
  if (active == 0) {
    throw Error(ErrorKind::kConfig, "corpus", "all split ratios are zero");
  }
  if (static_cast<int>(sizes.size()) < active) {
    throw Error(ErrorKind::kUsage, "corpus",
                std::to_string(sizes.size()) + " contracts cannot fill " +
                    std::to_string(active) + " splits");
  }

  std::map<std::string, Split> assignment;
  std::array<double, kNumSplits> load{};
  std::vector<std::pair<std::string, long long>> free;
  for (const auto &[contract, size] : sizes) {
    auto pin = config.pinned.find(contract);
    if (pin != config.pinned.end()) {
      assignment[contract] = pin->second;
      load[static_cast<int>(pin->second)] += size;
    } else {
      free.emplace_back(contract, size);
    }
  }

  std::mt19937_64 rng(config.seed);
  for (std::size_t i = free.size(); i > 1; --i) {
    std::size_t j = rng() % i;
    std::swap(free[i - 1], free[j]);
  }
  std::stable_sort(free.begin(), free.end(),
                   [](const auto &a, const auto &b) { return a.second > b.second; });

  const double total = static_cast<double>(records.size());
  for (const auto &[contract, size] : free) {
    int best = -1;
    double best_deficit = 0.0;
    for (int s = 0; s < kNumSplits; ++s) {
      if (config.ratios[s] <= 0) continue;
      double deficit = config.ratios[s] / ratio_sum * total - load[s];
      if (best < 0 || deficit > best_deficit) {
        best = s;
        best_deficit = deficit;
      }
    }
    assignment[contract] = static_cast<Split>(best);
    load[best] += size;
  }
  return assignment;
}

std::vector<AnnotationRecord> ApplySplits(
    const std::vector<AnnotationRecord> &records,
    const std::map<std::string, Split> &assignment) {
  std::vector<AnnotationRecord> out = records;
  for (AnnotationRecord &r : out) {
    auto it = assignment.find(r.contract_id);
    if (it != assignment.end()) r.split = it->second;
  }
  return out;
}

}  // namespace deontic::corpus

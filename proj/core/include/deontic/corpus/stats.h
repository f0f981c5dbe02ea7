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

// Corpus statistics.

#ifndef DEONTIC_CORPUS_STATS_H_
#define DEONTIC_CORPUS_STATS_H_

#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "deontic/corpus/record.h"
#include "deontic/types.h"

namespace deontic::corpus {

// shall, will, may, must, can, could, should, would, might, ought.
const std::set<std::string> &ModalAuxiliaries();

// A trigger is modal when any of its words is a modal auxiliary.
bool IsModalTrigger(const std::string &trigger);

struct SplitCounts {
  long long sentences = 0;  // records
  long long spans = 0;      // typed spans plus None-labelled records
};

struct StatsReport {
  long long records = 0;
  long long typed_spans = 0;
  long long none_records = 0;
  // Per agent group; typed entries count spans, None counts records.
  std::map<std::string, std::array<long long, kNumDeonticTypes>> distribution;
  // Per type, (trigger, count) by count descending then trigger.
  std::array<std::vector<std::pair<std::string, long long>>, kNumSpanTypes>
      top_triggers;
  long long unique_triggers = 0;
  double shall_share = 0;          // of spans with known text
  double multi_trigger_share = 0;  // of records
  double multi_type_share = 0;     // of the multi-trigger records
  double none_share = 0;           // of records
  double non_modal_unique_share = 0;
  double non_modal_span_share = 0;
  std::map<Split, SplitCounts> splits;
};

using GroupOf = std::function<std::string(const std::string &agent)>;

// Shares are fractions in [0, 1]; an empty corpus yields zeros. `group_of`
// defaults to the standard tenant/landlord grouping.
StatsReport ComputeStats(const std::vector<AnnotationRecord> &records,
                         int top_k = 10, GroupOf group_of = nullptr);

nlohmann::ordered_json ToJson(const StatsReport &report);

// split,sentences,spans
std::string SplitCountsCsv(const StatsReport &report);
// type,rank,trigger,count
std::string TopTriggersCsv(const StatsReport &report);
// group,Obl,Ent,Pro,Per,Nobl,Nent,None
std::string DistributionCsv(const StatsReport &report);

}  // namespace deontic::corpus

#endif  // DEONTIC_CORPUS_STATS_H_

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

#include "deontic/corpus/stats.h"

#include <algorithm>
#include <sstream>

#include "deontic/ingest/aliases.h"
#include "deontic/text.h"

namespace deontic::corpus {

const std::set<std::string> &ModalAuxiliaries() {
  static const auto *modals = new std::set<std::string>{
      "shall", "will", "may", "must", "can", "could", "should", "would",
      "might", "ought"};
  return *modals;
}

bool IsModalTrigger(const std::string &trigger) {
  for (const std::string &w : text::SplitWords(text::Lower(trigger))) {
    if (ModalAuxiliaries().contains(w)) return true;
  }
  return false;
}

StatsReport ComputeStats(const std::vector<AnnotationRecord> &records,
                         int top_k, GroupOf group_of) {
  if (!group_of) {
    static const ingest::AliasConfig kDefault;
    group_of = [](const std::string &agent) { return kDefault.GroupOf(agent); };
  }
  StatsReport report;
  std::array<std::map<std::string, long long>, kNumSpanTypes> per_type;
  std::map<std::string, long long> trigger_counts;
  long long texted_spans = 0;
  long long shall_spans = 0;
  long long multi_trigger = 0;
  long long multi_type = 0;

  for (const AnnotationRecord &r : records) {
    ++report.records;
    auto &dist = report.distribution[group_of(r.agent)];
    SplitCounts *split = r.split ? &report.splits[*r.split] : nullptr;
    if (split) ++split->sentences;
    if (r.labels.contains(DeonticType::kNone)) {
      ++report.none_records;
      ++dist[static_cast<int>(DeonticType::kNone)];
      if (split) ++split->spans;
    }
    std::set<DeonticType> span_types;
    for (const TypedSpan &s : r.spans) {
      ++report.typed_spans;
      ++dist[static_cast<int>(s.type)];
      if (split) ++split->spans;
      span_types.insert(s.type);
      std::string trigger = r.SpanText(s);
      if (trigger.empty()) continue;
      ++texted_spans;
      ++per_type[static_cast<int>(s.type)][trigger];
      ++trigger_counts[trigger];
      if (text::Lower(trigger) == "shall") ++shall_spans;
    }
    if (r.spans.size() >= 2) {
      ++multi_trigger;
      if (span_types.size() >= 2) ++multi_type;
    }
  }

  auto share = [](long long num, long long den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / den;
  };
  report.unique_triggers = static_cast<long long>(trigger_counts.size());
  report.shall_share = share(shall_spans, texted_spans);
  report.multi_trigger_share = share(multi_trigger, report.records);
  report.multi_type_share = share(multi_type, multi_trigger);
  report.none_share = share(report.none_records, report.records);

  long long non_modal_unique = 0;
  long long non_modal_spans = 0;
  for (const auto &[trigger, count] : trigger_counts) {
    if (IsModalTrigger(trigger)) continue;
    ++non_modal_unique;
    non_modal_spans += count;
  }
  report.non_modal_unique_share =
      share(non_modal_unique, report.unique_triggers);
  report.non_modal_span_share = share(non_modal_spans, texted_spans);

  for (int t = 0; t < kNumSpanTypes; ++t) {
    auto &top = report.top_triggers[t];
    top.assign(per_type[t].begin(), per_type[t].end());
    std::stable_sort(top.begin(), top.end(), [](const auto &a, const auto &b) {
      return a.second > b.second;
    });
    if (top_k >= 0 && static_cast<int>(top.size()) > top_k) top.resize(top_k);
  }
  return report;
}

nlohmann::ordered_json ToJson(const StatsReport &r) {
  nlohmann::ordered_json j;
  j["records"] = r.records;
  j["typed_spans"] = r.typed_spans;
  j["none_records"] = r.none_records;
  j["spans_with_none"] = r.typed_spans + r.none_records;
  nlohmann::ordered_json dist = nlohmann::ordered_json::object();
  for (const auto &[group, counts] : r.distribution) {
    nlohmann::ordered_json g;
    for (DeonticType t : kAllTypes) {
      g[std::string(TypeName(t))] = counts[static_cast<int>(t)];
    }
    dist[group] = std::move(g);
  }
  j["distribution"] = std::move(dist);
  nlohmann::ordered_json top = nlohmann::ordered_json::object();
  for (DeonticType t : kSpanTypes) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto &[trigger, count] : r.top_triggers[static_cast<int>(t)]) {
      list.push_back({{"trigger", trigger}, {"count", count}});
    }
    top[std::string(TypeName(t))] = std::move(list);
  }
  j["top_triggers"] = std::move(top);
  j["unique_triggers"] = r.unique_triggers;
  j["shall_share"] = r.shall_share;
  j["multi_trigger_share"] = r.multi_trigger_share;
  j["multi_type_share"] = r.multi_type_share;
  j["none_share"] = r.none_share;
  j["non_modal_unique_share"] = r.non_modal_unique_share;
  j["non_modal_span_share"] = r.non_modal_span_share;
  nlohmann::ordered_json splits = nlohmann::ordered_json::object();
  for (const auto &[split, counts] : r.splits) {
    splits[std::string(SplitName(split))] = {
        {"sentences", counts.sentences}, {"spans", counts.spans}};
  }
  j["splits"] = std::move(splits);
  return j;
}

namespace {

std::string CsvField(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string SplitCountsCsv(const StatsReport &r) {
  std::ostringstream out;
  out << "split,sentences,spans\n";
  for (const auto &[split, counts] : r.splits) {
    out << SplitName(split) << ',' << counts.sentences << ',' << counts.spans
        << '\n';
  }
  return out.str();
}

std::string TopTriggersCsv(const StatsReport &r) {
  std::ostringstream out;
  out << "type,rank,trigger,count\n";
  for (DeonticType t : kSpanTypes) {
    int rank = 0;
    for (const auto &[trigger, count] : r.top_triggers[static_cast<int>(t)]) {
      out << TypeName(t) << ',' << ++rank << ',' << CsvField(trigger) << ','
          << count << '\n';
    }
  }
  return out.str();
}

std::string DistributionCsv(const StatsReport &r) {
  std::ostringstream out;
  out << "group";
  for (DeonticType t : kAllTypes) out << ',' << TypeName(t);
  out << '\n';
  for (const auto &[group, counts] : r.distribution) {
    out << CsvField(group);
    for (long long c : counts) out << ',' << c;
    out << '\n';
  }
  return out.str();
}

}  // namespace deontic::corpus

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

#include "deontic/corpus/annotation.h"

#include <algorithm>
#include <map>
#include <set>

#include "deontic/error.h"

namespace deontic::corpus {

namespace {

std::array<int, kNumDeonticTypes> CountVotes(
    const std::vector<AnnotationRecord> &records) {
  std::array<int, kNumDeonticTypes> votes{};
  for (const AnnotationRecord &r : records) {
    for (DeonticType t : r.labels) ++votes[static_cast<int>(t)];
  }
  return votes;
}

std::vector<TypedSpan> Coalesce(std::vector<TypedSpan> spans) {
  SortSpans(spans);
  std::vector<TypedSpan> out;
  for (const TypedSpan &s : spans) {
    if (!out.empty() && s.start <= out.back().end + 1) {
      out.back().end = std::max(out.back().end, s.end);
    } else {
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace

LabelSet MajorityLabels(const std::vector<AnnotationRecord> &three) {
  auto votes = CountVotes(three);
  LabelSet majority;
  for (DeonticType t : kAllTypes) {
    if (votes[static_cast<int>(t)] >= 2) majority.insert(t);
  }
  return majority;
}

SpanUnion UnionSpans(const std::vector<AnnotationRecord> &annotations,
                     const LabelSet &majority_types) {
  SpanUnion result;
  for (DeonticType type : kSpanTypes) {
    if (!majority_types.contains(type)) continue;
    std::vector<TypedSpan> pooled;
    std::optional<std::vector<TypedSpan>> first;
    for (const AnnotationRecord &r : annotations) {
      if (!r.labels.contains(type)) continue;
      std::vector<TypedSpan> mine;
      for (const TypedSpan &s : r.spans) {
        if (s.type == type) mine.push_back(s);
      }
      mine = Coalesce(std::move(mine));
      if (!first) {
        first = mine;
      } else if (*first != mine) {
        result.flagged = true;
      }
      pooled.insert(pooled.end(), mine.begin(), mine.end());
    }
    for (const TypedSpan &s : Coalesce(std::move(pooled))) {
      result.spans.push_back(s);
    }
  }
  SortSpans(result.spans);
  return result;
}

MergeResult MergeMajority(const std::vector<AnnotationRecord> &three) {
  if (three.size() != 3) {
    throw Error(ErrorKind::kUsage, "corpus",
                "majority merge needs exactly 3 annotations, got " +
                    std::to_string(three.size()) +
                    (three.empty() ? "" : " for '" + three[0].sentence_id + "'"));
  }
  for (const AnnotationRecord &r : three) {
    if (r.sentence_id != three[0].sentence_id || r.agent != three[0].agent) {
      throw Error(ErrorKind::kUsage, "corpus",
                  "majority merge mixes '" + three[0].sentence_id + "'/'" +
                      three[0].agent + "' with '" + r.sentence_id + "'/'" +
                      r.agent + "'");
    }
  }
  MergeResult result;
  result.sentence_id = three[0].sentence_id;
  result.agent = three[0].agent;
  result.votes = CountVotes(three);
  LabelSet majority = MajorityLabels(three);
  if (majority.empty()) return result;

  AnnotationRecord merged = three[0];
  merged.annotator_id.reset();
  merged.labels = majority;
  SpanUnion spans = UnionSpans(three, majority);
  merged.spans = std::move(spans.spans);
  result.flagged = spans.flagged;
  for (const AnnotationRecord &r : three) {
    if (!merged.tokens && r.tokens) merged.tokens = r.tokens;
    if (!merged.text && r.text) merged.text = r.text;
    if (!merged.split && r.split) merged.split = r.split;
  }
  result.merged = std::move(merged);
  return result;
}

std::vector<MergeResult> MergeAnnotations(
    const std::vector<AnnotationRecord> &records) {
  std::vector<std::pair<std::string, std::string>> order;
  std::map<std::pair<std::string, std::string>, std::vector<AnnotationRecord>>
      groups;
  for (const AnnotationRecord &r : records) {
    auto key = std::make_pair(r.sentence_id, r.agent);
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) order.push_back(key);
    it->second.push_back(r);
  }
  std::vector<MergeResult> results;
  results.reserve(order.size());
  for (const auto &key : order) results.push_back(MergeMajority(groups[key]));
  return results;
}

double KrippendorffAlphaNominal(const ReliabilityData &data) {
  std::map<int, int> code;  // value -> dense index
  for (const auto &unit : data) {
    for (const auto &v : unit) {
      if (v) code.emplace(*v, 0);
    }
  }
  int k = 0;
  for (auto &[value, index] : code) index = k++;

  std::vector<double> o(static_cast<std::size_t>(k) * k, 0.0);
  int pairable_units = 0;
  for (const auto &unit : data) {
    std::vector<int> values;
    for (const auto &v : unit) {
      if (v) values.push_back(code[*v]);
    }
    const int m = static_cast<int>(values.size());
    if (m < 2) continue;
    ++pairable_units;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i != j) o[values[i] * k + values[j]] += 1.0 / (m - 1);
      }
    }
  }
  if (pairable_units < 2) {
    throw Error(ErrorKind::kUndefined, "corpus",
                "Krippendorff's alpha needs at least 2 pairable units, got " +
                    std::to_string(pairable_units));
  }
  std::vector<double> n_c(k, 0.0);
  double n = 0.0;
  double observed = 0.0;
  for (int c = 0; c < k; ++c) {
    for (int d = 0; d < k; ++d) {
      n_c[c] += o[c * k + d];
      if (c != d) observed += o[c * k + d];
    }
    n += n_c[c];
  }
  double expected = 0.0;
  for (int c = 0; c < k; ++c) {
    for (int d = 0; d < k; ++d) {
      if (c != d) expected += n_c[c] * n_c[d];
    }
  }
  if (expected == 0.0) return 1.0;
  return 1.0 - (n - 1.0) * observed / expected;
}

void AppendTokenUnits(
    const std::vector<std::optional<std::vector<TypedSpan>>> &per_annotator,
    int n_tokens, const LabelSet &majority_types, ReliabilityData &data) {
  constexpr int kOutside = -1;
  std::size_t first = data.size();
  data.resize(first + std::max(n_tokens, 0),
              std::vector<std::optional<int>>(per_annotator.size()));
  for (std::size_t a = 0; a < per_annotator.size(); ++a) {
    if (!per_annotator[a]) continue;
    std::vector<int> values(std::max(n_tokens, 0), kOutside);
    for (const TypedSpan &s : *per_annotator[a]) {
      if (!majority_types.contains(s.type)) continue;
      for (int t = std::max(s.start, 0); t <= s.end && t < n_tokens; ++t) {
        int v = static_cast<int>(s.type);
        if (values[t] == kOutside || v < values[t]) values[t] = v;
      }
    }
    for (int t = 0; t < n_tokens; ++t) data[first + t][a] = values[t];
  }
}

double TokenAlpha(
    const std::vector<std::optional<std::vector<TypedSpan>>> &per_annotator,
    int n_tokens, const LabelSet &majority_types) {
  ReliabilityData data;
  AppendTokenUnits(per_annotator, n_tokens, majority_types, data);
  return KrippendorffAlphaNominal(data);
}

AgreementReport ComputeAgreement(const std::vector<AnnotationRecord> &records) {
  std::map<std::string, int> annotator_index;
  for (const AnnotationRecord &r : records) {
    annotator_index.emplace(r.annotator_id.value_or(""), 0);
  }
  int a = 0;
  for (auto &[id, index] : annotator_index) index = a++;

  std::vector<std::pair<std::string, std::string>> order;
  std::map<std::pair<std::string, std::string>,
           std::vector<const AnnotationRecord *>>
      items;
  for (const AnnotationRecord &r : records) {
    auto key = std::make_pair(r.sentence_id, r.agent);
    auto [it, inserted] = items.try_emplace(key);
    if (inserted) order.push_back(key);
    it->second.push_back(&r);
  }

  AgreementReport report;
  report.items = static_cast<int>(order.size());
  report.annotators = a;

  double sum = 0.0;
  int defined = 0;
  for (DeonticType type : kAllTypes) {
    ReliabilityData data;
    for (const auto &key : order) {
      std::vector<std::optional<int>> unit(a);
      for (const AnnotationRecord *r : items[key]) {
        unit[annotator_index[r->annotator_id.value_or("")]] =
            r->labels.contains(type) ? 1 : 0;
      }
      data.push_back(std::move(unit));
    }
    try {
      double alpha = KrippendorffAlphaNominal(data);
      report.per_type[static_cast<int>(type)] = alpha;
      sum += alpha;
      ++defined;
    } catch (const Error &e) {
      if (e.kind() != ErrorKind::kUndefined) throw;
    }
  }
  if (defined > 0) report.mean_type_alpha = sum / defined;

  ReliabilityData tokens;
  for (const auto &key : order) {
    const auto &group = items[key];
    std::array<int, kNumDeonticTypes> votes{};
    int n_tokens = 0;
    for (const AnnotationRecord *r : group) {
      for (DeonticType t : r->labels) ++votes[static_cast<int>(t)];
      if (r->tokens) {
        n_tokens = std::max(n_tokens, static_cast<int>(r->tokens->size()));
      }
      for (const TypedSpan &s : r->spans) n_tokens = std::max(n_tokens, s.end + 1);
    }
    LabelSet majority;
    for (DeonticType t : kSpanTypes) {
      if (votes[static_cast<int>(t)] >= 2) majority.insert(t);
    }
    if (majority.empty()) continue;
    std::vector<std::optional<std::vector<TypedSpan>>> per_annotator(a);
    for (const AnnotationRecord *r : group) {
      per_annotator[annotator_index[r->annotator_id.value_or("")]] = r->spans;
    }
    AppendTokenUnits(per_annotator, n_tokens, majority, tokens);
  }
  try {
    report.token_alpha = KrippendorffAlphaNominal(tokens);
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::kUndefined) throw;
  }
  return report;
}

}  // namespace deontic::corpus

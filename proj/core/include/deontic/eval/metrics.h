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

// Classification, span and red-flag metrics.

#ifndef DEONTIC_EVAL_METRICS_H_
#define DEONTIC_EVAL_METRICS_H_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "deontic/rules/tags.h"
#include "deontic/types.h"

namespace deontic::eval {

enum class MetricMode { kClassification, kSpanLabeled, kSpanUnlabeled };

std::string_view ModeName(MetricMode mode);

struct Counts {
  long long tp = 0;
  long long fp = 0;
  long long fn = 0;
};

struct Scores {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  // Set when a denominator was zero and the value defaulted to 0.
  bool zero_division = false;
};

// P = tp/(tp+fp), R = tp/(tp+fn), F1 = 2PR/(P+R); zero denominators give 0.
Scores ScoresFrom(const Counts &counts);

struct ClassResult {
  DeonticType type = DeonticType::kObl;
  Counts counts;
  Scores scores;
  long long support = 0;  // gold occurrences
};

struct MetricsReport {
  MetricMode mode = MetricMode::kClassification;
  std::vector<ClassResult> per_class;  // enum order
  std::vector<DeonticType> macro_classes;
  Scores macro;  // unweighted mean over macro_classes; F1 averages F1s
  Counts micro_counts;
  Scores micro;
  double accuracy = 0;
  long long records = 0;
  long long tokens = 0;   // span modes
  long long repairs = 0;  // span modes
  std::string macro_policy;
};

struct ClassificationOptions {
  // Macro over all seven classes instead of those with gold or predicted
  // support.
  bool macro_all_classes = false;
};

// Per class presence over all seven classes (None included); macro over the
// classes with gold or predicted support unless `macro_all_classes`.
// Accuracy is exact set match. Throws Error(kUsage) on length mismatch.
MetricsReport ClassificationMetrics(const std::vector<LabelSet> &predictions,
                                    const std::vector<LabelSet> &golds,
                                    const ClassificationOptions &options = {});

struct Entities {
  std::set<TypedSpan> spans;
  long long repairs = 0;
};

// Maximal spans. An I-X without an open X span starts a new span and counts
// as one repair; a B-X with no following I-X is a single-token span.
Entities ExtractEntities(const rules::TagSequence &tags);

struct SpanMetricsOptions {
  // Macro over all six span types instead of those with gold or predicted
  // support.
  bool macro_all_types = false;
};

// Entity-level P/R/F1. Labeled: exact (type, start, end). Unlabeled: types
// are erased from the tags and entities re-extracted; the report then has
// one pooled class and macro equals micro. Accuracy is token-level tag
// agreement (on erased tags when unlabeled). Throws Error(kUsage) on
// sentence count or length mismatch.
MetricsReport SpanMetrics(const std::vector<rules::TagSequence> &predictions,
                          const std::vector<rules::TagSequence> &golds,
                          MetricMode mode,
                          const SpanMetricsOptions &options = {});

// Red flag: a sentence is positive iff some alias has a non-None type.
using AliasLabels = std::map<std::string, LabelSet>;

bool RedflagPositive(const AliasLabels &per_alias);

struct BinaryReport {
  long long tp = 0;
  long long fp = 0;
  long long fn = 0;
  long long tn = 0;
  Scores scores;
  double accuracy = 0;
};

// Throws Error(kUsage) on length mismatch.
BinaryReport RedflagMetrics(const std::vector<AliasLabels> &predictions,
                            const std::vector<bool> &golds);

nlohmann::ordered_json ToJson(const MetricsReport &report);
nlohmann::ordered_json ToJson(const BinaryReport &report);

// Value x 100 rounded to two decimals, printed with two decimals.
std::string Percent(double value);

// "row,Accuracy,Precision,Recall,F1" then one line per named report.
std::string ClassificationCsv(
    const std::vector<std::pair<std::string, MetricsReport>> &rows);

// Labeled and unlabeled blocks side by side.
struct SpanRow {
  std::string name;
  MetricsReport labeled;
  MetricsReport unlabeled;
};
std::string SpanCsv(const std::vector<SpanRow> &rows);

}  // namespace deontic::eval

#endif  // DEONTIC_EVAL_METRICS_H_

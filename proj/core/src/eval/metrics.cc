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

#include "deontic/eval/metrics.h"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "deontic/error.h"

namespace deontic::eval {

using rules::Tag;
using rules::TagKind;
using rules::TagSequence;

std::string_view ModeName(MetricMode mode) {
  switch (mode) {
    case MetricMode::kClassification: return "classification";
    case MetricMode::kSpanLabeled: return "span-labeled";
    case MetricMode::kSpanUnlabeled: return "span-unlabeled";
  }
  return "classification";
}

Scores ScoresFrom(const Counts &c) {
  Scores s;
  if (c.tp + c.fp > 0) {
    s.precision = static_cast<double>(c.tp) / (c.tp + c.fp);
  } else {
    s.zero_division = true;
  }
  if (c.tp + c.fn > 0) {
    s.recall = static_cast<double>(c.tp) / (c.tp + c.fn);
  } else {
    s.zero_division = true;
  }
  if (s.precision + s.recall > 0) {
    s.f1 = 2 * s.precision * s.recall / (s.precision + s.recall);
  } else {
    s.zero_division = true;
  }
  return s;
}

namespace {

void Finish(MetricsReport &report) {
  Scores sum;
  int n = 0;
  for (const ClassResult &c : report.per_class) {
    bool included = false;
    for (DeonticType t : report.macro_classes) included = included || t == c.type;
    if (!included) continue;
    sum.precision += c.scores.precision;
    sum.recall += c.scores.recall;
    sum.f1 += c.scores.f1;
    sum.zero_division = sum.zero_division || c.scores.zero_division;
    ++n;
  }
  if (n > 0) {
    report.macro = {sum.precision / n, sum.recall / n, sum.f1 / n,
                    sum.zero_division};
  }
  report.micro = ScoresFrom(report.micro_counts);
}

}  // namespace

MetricsReport ClassificationMetrics(const std::vector<LabelSet> &predictions,
                                    const std::vector<LabelSet> &golds,
                                    const ClassificationOptions &options) {
  if (predictions.size() != golds.size()) {
    throw Error(ErrorKind::kUsage, "eval",
                std::to_string(predictions.size()) + " predictions for " +
                    std::to_string(golds.size()) + " gold records");
  }
  MetricsReport report;
  report.mode = MetricMode::kClassification;
  report.records = static_cast<long long>(golds.size());
  report.macro_policy =
      options.macro_all_classes ? "all-7-classes" : "classes-with-support";
  long long exact = 0;
  for (DeonticType type : kAllTypes) {
    ClassResult c;
    c.type = type;
    for (std::size_t i = 0; i < golds.size(); ++i) {
      bool p = predictions[i].contains(type);
      bool g = golds[i].contains(type);
      c.counts.tp += p && g;
      c.counts.fp += p && !g;
      c.counts.fn += !p && g;
      c.support += g;
    }
    c.scores = ScoresFrom(c.counts);
    report.micro_counts.tp += c.counts.tp;
    report.micro_counts.fp += c.counts.fp;
    report.micro_counts.fn += c.counts.fn;
    report.per_class.push_back(c);
    if (options.macro_all_classes || c.counts.tp + c.counts.fp + c.counts.fn > 0) {
      report.macro_classes.push_back(type);
    }
  }
  for (std::size_t i = 0; i < golds.size(); ++i) {
    exact += predictions[i] == golds[i];
  }
  report.accuracy =
      golds.empty() ? 0.0 : static_cast<double>(exact) / golds.size();
  Finish(report);
  return report;
}

Entities ExtractEntities(const TagSequence &tags) {
  Entities out;
  const int n = static_cast<int>(tags.size());
  int open_start = -1;
  DeonticType open_type = DeonticType::kNone;
  auto close = [&](int end) {
    if (open_start >= 0) out.spans.insert({open_type, open_start, end});
    open_start = -1;
  };
  for (int i = 0; i < n; ++i) {
    const Tag &t = tags[i];
    switch (t.kind) {
      case TagKind::kO:
        close(i - 1);
        break;
      case TagKind::kS:
        close(i - 1);
        out.spans.insert({t.type, i, i});
        break;
      case TagKind::kB:
        close(i - 1);
        open_start = i;
        open_type = t.type;
        break;
      case TagKind::kI:
        if (open_start < 0 || open_type != t.type) {
          close(i - 1);
          ++out.repairs;
          open_start = i;
          open_type = t.type;
        }
        break;
    }
  }
  close(n - 1);
  return out;
}

MetricsReport SpanMetrics(const std::vector<TagSequence> &predictions,
                          const std::vector<TagSequence> &golds,
                          MetricMode mode, const SpanMetricsOptions &options) {
  if (mode == MetricMode::kClassification) {
    throw Error(ErrorKind::kUsage, "eval", "span metrics need a span mode");
  }
  if (predictions.size() != golds.size()) {
    throw Error(ErrorKind::kUsage, "eval",
                std::to_string(predictions.size()) + " predicted sentences for " +
                    std::to_string(golds.size()) + " gold sentences");
  }
  const bool labeled = mode == MetricMode::kSpanLabeled;
  MetricsReport report;
  report.mode = mode;
  report.records = static_cast<long long>(golds.size());
  report.macro_policy = labeled ? (options.macro_all_types ? "all-6-span-types"
                                                           : "types-with-support")
                                : "pooled";

  std::array<Counts, kNumSpanTypes> per_type{};
  std::array<long long, kNumSpanTypes> support{};
  std::array<bool, kNumSpanTypes> seen{};
  long long correct_tokens = 0;

  for (std::size_t i = 0; i < golds.size(); ++i) {
    if (predictions[i].size() != golds[i].size()) {
      throw Error(ErrorKind::kUsage, "eval",
                  "sentence " + std::to_string(i) + ": " +
                      std::to_string(predictions[i].size()) + " predicted tags for " +
                      std::to_string(golds[i].size()) + " gold tags");
    }
    TagSequence p = labeled ? predictions[i] : rules::EraseTypes(predictions[i]);
    TagSequence g = labeled ? golds[i] : rules::EraseTypes(golds[i]);
    for (std::size_t k = 0; k < g.size(); ++k) correct_tokens += p[k] == g[k];
    report.tokens += static_cast<long long>(g.size());

    Entities pe = ExtractEntities(p);
    Entities ge = ExtractEntities(g);
    report.repairs += pe.repairs + ge.repairs;
    for (const TypedSpan &s : pe.spans) {
      int t = static_cast<int>(s.type);
      seen[t] = true;
      if (ge.spans.contains(s)) {
        ++per_type[t].tp;
      } else {
        ++per_type[t].fp;
      }
    }
    for (const TypedSpan &s : ge.spans) {
      int t = static_cast<int>(s.type);
      seen[t] = true;
      ++support[t];
      if (!pe.spans.contains(s)) ++per_type[t].fn;
    }
  }
  report.accuracy = report.tokens == 0
                        ? 0.0
                        : static_cast<double>(correct_tokens) / report.tokens;

  for (DeonticType type : kSpanTypes) {
    int t = static_cast<int>(type);
    report.micro_counts.tp += per_type[t].tp;
    report.micro_counts.fp += per_type[t].fp;
    report.micro_counts.fn += per_type[t].fn;
    if (!labeled) continue;
    ClassResult c;
    c.type = type;
    c.counts = per_type[t];
    c.scores = ScoresFrom(c.counts);
    c.support = support[t];
    report.per_class.push_back(c);
    if (options.macro_all_types || seen[t]) report.macro_classes.push_back(type);
  }
  Finish(report);
  if (!labeled) report.macro = report.micro;
  return report;
}

bool RedflagPositive(const AliasLabels &per_alias) {
  for (const auto &[alias, labels] : per_alias) {
    for (DeonticType t : labels) {
      if (t != DeonticType::kNone) return true;
    }
  }
  return false;
}

BinaryReport RedflagMetrics(const std::vector<AliasLabels> &predictions,
                            const std::vector<bool> &golds) {
  if (predictions.size() != golds.size()) {
    throw Error(ErrorKind::kUsage, "eval",
                std::to_string(predictions.size()) + " predicted sentences for " +
                    std::to_string(golds.size()) + " gold labels");
  }
  BinaryReport r;
  for (std::size_t i = 0; i < golds.size(); ++i) {
    bool p = RedflagPositive(predictions[i]);
    bool g = golds[i];
    r.tp += p && g;
    r.fp += p && !g;
    r.fn += !p && g;
    r.tn += !p && !g;
  }
  r.scores = ScoresFrom({r.tp, r.fp, r.fn});
  r.accuracy = golds.empty() ? 0.0
                             : static_cast<double>(r.tp + r.tn) / golds.size();
  return r;
}

namespace {

nlohmann::ordered_json ScoresJson(const Scores &s) {
  return {{"precision", s.precision},
          {"recall", s.recall},
          {"f1", s.f1},
          {"zero_division", s.zero_division}};
}

nlohmann::ordered_json CountsJson(const Counts &c) {
  return {{"tp", c.tp}, {"fp", c.fp}, {"fn", c.fn}};
}

}  // namespace

nlohmann::ordered_json ToJson(const MetricsReport &r) {
  nlohmann::ordered_json j;
  j["mode"] = ModeName(r.mode);
  j["records"] = r.records;
  if (r.mode != MetricMode::kClassification) {
    j["tokens"] = r.tokens;
    j["repairs"] = r.repairs;
  }
  j["accuracy"] = r.accuracy;
  j["macro"] = ScoresJson(r.macro);
  j["macro_policy"] = r.macro_policy;
  std::vector<std::string> classes;
  for (DeonticType t : r.macro_classes) classes.emplace_back(TypeName(t));
  j["macro_classes"] = classes;
  nlohmann::ordered_json micro = ScoresJson(r.micro);
  micro["counts"] = CountsJson(r.micro_counts);
  j["micro"] = std::move(micro);
  nlohmann::ordered_json per_class = nlohmann::ordered_json::object();
  for (const ClassResult &c : r.per_class) {
    nlohmann::ordered_json cj = ScoresJson(c.scores);
    cj["support"] = c.support;
    cj["counts"] = CountsJson(c.counts);
    per_class[std::string(TypeName(c.type))] = std::move(cj);
  }
  j["per_class"] = std::move(per_class);
  return j;
}

nlohmann::ordered_json ToJson(const BinaryReport &r) {
  nlohmann::ordered_json j;
  j["tp"] = r.tp;
  j["fp"] = r.fp;
  j["fn"] = r.fn;
  j["tn"] = r.tn;
  j["accuracy"] = r.accuracy;
  j["precision"] = r.scores.precision;
  j["recall"] = r.scores.recall;
  j["f1"] = r.scores.f1;
  j["zero_division"] = r.scores.zero_division;
  return j;
}

std::string Percent(double value) {
  double rounded = std::round(value * 10000.0) / 100.0;
  if (rounded == 0.0) rounded = 0.0;  // no "-0.00"
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", rounded);
  return buf;
}

std::string ClassificationCsv(
    const std::vector<std::pair<std::string, MetricsReport>> &rows) {
  std::ostringstream out;
  out << "row,Accuracy,Precision,Recall,F1\n";
  for (const auto &[name, r] : rows) {
    out << name << ',' << Percent(r.accuracy) << ',' << Percent(r.macro.precision)
        << ',' << Percent(r.macro.recall) << ',' << Percent(r.macro.f1) << '\n';
  }
  return out.str();
}

std::string SpanCsv(const std::vector<SpanRow> &rows) {
  std::ostringstream out;
  out << "row,labeled_Accuracy,labeled_Precision,labeled_Recall,labeled_F1,"
         "unlabeled_Accuracy,unlabeled_Precision,unlabeled_Recall,"
         "unlabeled_F1\n";
  for (const SpanRow &r : rows) {
    out << r.name << ',' << Percent(r.labeled.accuracy) << ','
        << Percent(r.labeled.macro.precision) << ','
        << Percent(r.labeled.macro.recall) << ',' << Percent(r.labeled.macro.f1)
        << ',' << Percent(r.unlabeled.accuracy) << ','
        << Percent(r.unlabeled.macro.precision) << ','
        << Percent(r.unlabeled.macro.recall) << ','
        << Percent(r.unlabeled.macro.f1) << '\n';
  }
  return out.str();
}

}  // namespace deontic::eval

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

// Converts between library types and the oracle's string form and compares
// reports field by field. Comparisons return an empty string on exact
// equality, otherwise a description of the first difference.

#ifndef DEONTIC_TESTS_SUPPORT_ORACLE_CHECK_H_
#define DEONTIC_TESTS_SUPPORT_ORACLE_CHECK_H_

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "deontic/eval/metrics.h"
#include "deontic/rules/tags.h"
#include "deontic/types.h"
#include "support/oracles.h"

namespace deontic::testing {

inline oracle::Labels ToOracle(const LabelSet &labels) {
  oracle::Labels out;
  for (DeonticType t : labels) out.insert(std::string(TypeName(t)));
  return out;
}

inline std::vector<oracle::Labels> ToOracle(const std::vector<LabelSet> &sets) {
  std::vector<oracle::Labels> out;
  for (const LabelSet &s : sets) out.push_back(ToOracle(s));
  return out;
}

inline oracle::TagMatrix ToOracle(const std::vector<rules::TagSequence> &tags) {
  oracle::TagMatrix out;
  for (const auto &t : tags) out.push_back(rules::TagStrings(t));
  return out;
}

inline LabelSet RandomLabelSet(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> coin(0, 3), bit(0, 1);
  if (coin(rng) == 0) return {DeonticType::kNone};
  LabelSet out;
  for (DeonticType t : kSpanTypes) {
    if (bit(rng) == 1) out.insert(t);
  }
  if (out.empty()) out.insert(DeonticType::kNone);
  return out;
}

inline std::string Diff(const char *field, double got, double want) {
  if (got == want) return "";
  std::ostringstream out;
  out.precision(17);
  out << field << ": library " << got << ", oracle " << want;
  return out.str();
}

inline std::string Diff(const char *field, long long got, long long want) {
  if (got == want) return "";
  return std::string(field) + ": library " + std::to_string(got) +
         ", oracle " + std::to_string(want);
}

inline std::string CompareCounts(const char *what, const eval::Counts &got,
                                 const oracle::Tally &want) {
  for (std::string d : {Diff("tp", got.tp, want.tp), Diff("fp", got.fp, want.fp),
                        Diff("fn", got.fn, want.fn)}) {
    if (!d.empty()) return std::string(what) + " " + d;
  }
  return "";
}

inline std::string CompareScores(const char *what, const eval::Scores &got,
                                 const oracle::Prf &want) {
  for (std::string d :
       {Diff("P", got.precision, want.p), Diff("R", got.recall, want.r),
        Diff("F1", got.f1, want.f)}) {
    if (!d.empty()) return std::string(what) + " " + d;
  }
  return "";
}

// Compares per-class counts (when the report has them), macro class set,
// macro and micro scores and accuracy.
inline std::string CompareReport(const eval::MetricsReport &got,
                                 const oracle::Report &want,
                                 bool per_class = true) {
  if (per_class) {
    if (got.per_class.size() != want.per_class.size()) {
      return "per-class size differs";
    }
    for (std::size_t c = 0; c < got.per_class.size(); ++c) {
      std::string d = CompareCounts(
          std::string(TypeName(got.per_class[c].type)).c_str(),
          got.per_class[c].counts, want.per_class[c]);
      if (!d.empty()) return d;
    }
    std::vector<int> classes;
    for (DeonticType t : got.macro_classes) classes.push_back(int(t));
    if (classes != want.macro_classes) return "macro class set differs";
  }
  for (std::string d :
       {CompareCounts("micro", got.micro_counts, want.micro),
        CompareScores("micro", got.micro, want.micro_scores),
        CompareScores("macro", got.macro, want.macro),
        Diff("accuracy", got.accuracy, want.accuracy)}) {
    if (!d.empty()) return d;
  }
  return "";
}

inline std::string CheckClassification(const std::vector<LabelSet> &pred,
                                       const std::vector<LabelSet> &gold,
                                       bool macro_all = false) {
  return CompareReport(
      eval::ClassificationMetrics(pred, gold, {macro_all}),
      oracle::Classification(ToOracle(pred), ToOracle(gold), macro_all));
}

inline std::string CheckSpans(const std::vector<rules::TagSequence> &pred,
                              const std::vector<rules::TagSequence> &gold,
                              bool labeled, bool macro_all = false) {
  auto got = eval::SpanMetrics(
      pred, gold,
      labeled ? eval::MetricMode::kSpanLabeled : eval::MetricMode::kSpanUnlabeled,
      {macro_all});
  auto want = oracle::Spans(ToOracle(pred), ToOracle(gold), labeled, macro_all);
  return CompareReport(got, want, labeled);
}

}  // namespace deontic::testing

#endif  // DEONTIC_TESTS_SUPPORT_ORACLE_CHECK_H_

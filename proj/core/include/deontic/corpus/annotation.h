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

// Merging triple annotations and measuring their agreement.

#ifndef DEONTIC_CORPUS_ANNOTATION_H_
#define DEONTIC_CORPUS_ANNOTATION_H_

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deontic/corpus/record.h"
#include "deontic/types.h"

namespace deontic::corpus {

// Types marked by at least two of the three annotators. None votes like any
// other label.
LabelSet MajorityLabels(const std::vector<AnnotationRecord> &three);

struct SpanUnion {
  std::vector<TypedSpan> spans;
  // Set when annotators who marked a majority type disagreed on its spans.
  bool flagged = false;
};

// Per majority type, the union of all annotators' intervals with
// overlapping or adjacent intervals coalesced. Spans of other types are
// dropped.
SpanUnion UnionSpans(const std::vector<AnnotationRecord> &annotations,
                     const LabelSet &majority_types);

struct MergeResult {
  std::string sentence_id;
  std::string agent;
  std::optional<AnnotationRecord> merged;  // empty when discarded
  bool flagged = false;
  std::array<int, kNumDeonticTypes> votes{};
};

// Exactly three records sharing sentence_id and agent, else
// Error(kUsage). No majority type means a discard.
MergeResult MergeMajority(const std::vector<AnnotationRecord> &three);

// Groups records by (sentence_id, agent) in first-seen order and merges
// each group.
std::vector<MergeResult> MergeAnnotations(
    const std::vector<AnnotationRecord> &records);

// Items x annotators; nullopt is a missing value.
using ReliabilityData = std::vector<std::vector<std::optional<int>>>;

// Nominal Krippendorff's alpha from the coincidence matrix. Units with
// fewer than two values are not pairable. Throws Error(kUndefined) when
// fewer than two units are pairable; returns 1 when expected disagreement
// is zero.
double KrippendorffAlphaNominal(const ReliabilityData &data);

// One value per token: the annotator's span type, restricted to
// `majority_types`, or O (the first type by enum order wins on overlap).
// A nullopt annotator contributes missing values.
void AppendTokenUnits(
    const std::vector<std::optional<std::vector<TypedSpan>>> &per_annotator,
    int n_tokens, const LabelSet &majority_types, ReliabilityData &data);

double TokenAlpha(
    const std::vector<std::optional<std::vector<TypedSpan>>> &per_annotator,
    int n_tokens, const LabelSet &majority_types);

struct AgreementReport {
  std::array<std::optional<double>, kNumDeonticTypes> per_type;
  std::optional<double> mean_type_alpha;  // over defined per-type values
  std::optional<double> token_alpha;
  int items = 0;
  int annotators = 0;
};

// Per-type presence alpha over (sentence_id, agent) items and token alpha
// over majority types. Annotators are identified by annotator_id.
AgreementReport ComputeAgreement(const std::vector<AnnotationRecord> &records);

}  // namespace deontic::corpus

#endif  // DEONTIC_CORPUS_ANNOTATION_H_

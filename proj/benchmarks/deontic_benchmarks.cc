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

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "deontic/corpus/annotation.h"
#include "deontic/eval/metrics.h"
#include "deontic/lingrep/parse.h"
#include "deontic/rules/engine.h"
#include "deontic/rules/lexicon.h"
#include "deontic/rules/tags.h"

namespace {

using namespace deontic;

const std::vector<std::string> kModals = {"shall", "may", "must", "shall not",
                                          "will", "is entitled to"};

// A run-on sentence of `clauses` coordinated "<Agent> <modal> pay rent ,"
// clauses, the first verb being the root.
lingrep::ParsedSentence ChainSentence(int clauses) {
  std::ostringstream conllu;
  conllu << "# sent_id = bench\n";
  int id = 0;
  int first_verb = 0;
  for (int c = 0; c < clauses; ++c) {
    std::istringstream modal(kModals[c % kModals.size()]);
    std::vector<std::string> modal_words;
    for (std::string w; modal >> w;) modal_words.push_back(w);
    int subj = id + 1;
    int verb = subj + static_cast<int>(modal_words.size()) + 1;
    if (c == 0) first_verb = verb;
    auto row = [&](int i, const std::string &form, const std::string &pos,
                   int head, const std::string &rel) {
      conllu << i << '\t' << form << "\t_\t" << pos << "\t_\t_\t" << head << '\t'
             << rel << "\t_\t_\n";
    };
    row(subj, c % 2 ? "Landlord" : "Tenant", "PROPN", verb, "nsubj");
    for (std::size_t k = 0; k < modal_words.size(); ++k) {
      row(subj + 1 + static_cast<int>(k), modal_words[k], "AUX", verb, "aux");
    }
    row(verb, "pay", "VERB", c == 0 ? 0 : first_verb, c == 0 ? "root" : "conj");
    row(verb + 1, "rent", "NOUN", verb, "obj");
    row(verb + 2, ",", "PUNCT", verb, "punct");
    id = verb + 2;
  }
  conllu << '\n';
  std::istringstream in(conllu.str());
  auto parsed = lingrep::ReadConllu(in, "bench").front();
  lingrep::NormalizeLabels(parsed, lingrep::DefaultLabelMap());
  return parsed;
}

std::vector<ingest::AgentAlias> Agents() {
  return {{"Tenant", "Tenant", 1}, {"Landlord", "Landlord", 1}};
}

void BM_FindTriggers(benchmark::State &state) {
  auto parsed = ChainSentence(static_cast<int>(state.range(0)));
  std::vector<std::string> tokens;
  for (const auto &t : parsed.tokens) tokens.push_back(t.surface);
  const auto &lexicon = rules::DefaultLexicon();
  for (auto _ : state) {
    benchmark::DoNotOptimize(rules::FindTriggers(tokens, lexicon));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(tokens.size()));
}
BENCHMARK(BM_FindTriggers)->Range(1, 256);

void BM_ExtractSentence(benchmark::State &state) {
  auto parsed = ChainSentence(static_cast<int>(state.range(0)));
  auto agents = Agents();
  const auto &lexicon = rules::DefaultLexicon();
  for (auto _ : state) {
    benchmark::DoNotOptimize(rules::ExtractSentence(parsed, lexicon, agents));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<long>(parsed.tokens.size()));
}
BENCHMARK(BM_ExtractSentence)->Range(1, 256);

void BM_KrippendorffAlpha(benchmark::State &state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> value(0, 6);
  corpus::ReliabilityData data(state.range(0));
  for (auto &unit : data) {
    for (int coder = 0; coder < 3; ++coder) unit.push_back(value(rng));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(corpus::KrippendorffAlphaNominal(data));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_KrippendorffAlpha)->Range(64, 1 << 16);

std::vector<rules::TagSequence> RandomTags(std::mt19937_64 &rng, int sentences,
                                           int length) {
  std::uniform_int_distribution<int> start(0, 3), type(0, kNumSpanTypes - 1),
      span_length(1, 4);
  std::vector<rules::TagSequence> out;
  for (int s = 0; s < sentences; ++s) {
    std::vector<TypedSpan> spans;
    for (int i = 0; i < length;) {
      if (start(rng) != 0) {
        ++i;
        continue;
      }
      int end = std::min(length - 1, i + span_length(rng) - 1);
      spans.push_back({static_cast<DeonticType>(type(rng)), i, end});
      i = end + 1;
    }
    out.push_back(rules::SpansToTags(spans, length));
  }
  return out;
}

void BM_SpanMetrics(benchmark::State &state) {
  std::mt19937_64 rng(2);
  int sentences = static_cast<int>(state.range(0));
  auto pred = RandomTags(rng, sentences, 30);
  auto gold = RandomTags(rng, sentences, 30);
  auto mode = state.range(1) ? eval::MetricMode::kSpanLabeled
                             : eval::MetricMode::kSpanUnlabeled;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval::SpanMetrics(pred, gold, mode));
  }
  state.SetItemsProcessed(state.iterations() * sentences);
}
BENCHMARK(BM_SpanMetrics)->ArgsProduct({{64, 1024, 16384}, {0, 1}});

}  // namespace

BENCHMARK_MAIN();

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

#include "commands.h"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "deontic/corpus/annotation.h"
#include "deontic/corpus/export.h"
#include "deontic/corpus/record.h"
#include "deontic/corpus/split.h"
#include "deontic/corpus/stats.h"
#include "deontic/error.h"
#include "deontic/eval/metrics.h"
#include "deontic/ingest/aliases.h"
#include "deontic/ingest/filters.h"
#include "deontic/ingest/html.h"
#include "deontic/ingest/sentences.h"
#include "deontic/io.h"
#include "deontic/lingrep/constituency.h"
#include "deontic/lingrep/parse.h"
#include "deontic/rules/baselines.h"
#include "deontic/rules/engine.h"
#include "deontic/rules/tags.h"
#include "deontic/text.h"
#include "run_context.h"

namespace deontic::tools {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;
using Opt = std::optional<std::string>;

// Effective configuration: the --config file, then --seed, then the
// command's own overrides (null values are skipped).
RunContext MakeContext(const std::string &command, const GlobalOptions &g,
                       const json &overrides = json::object()) {
  json config = json::object();
  if (g.config) {
    if (!fs::exists(*g.config)) {
      throw Error(ErrorKind::kConfig, "cli",
                  "config file '" + *g.config + "' not found");
    }
    try {
      config = json::parse(io::ReadFile(*g.config));
    } catch (const json::exception &e) {
      throw Error(ErrorKind::kConfig, "cli",
                  *g.config + ": " + std::string(e.what()));
    }
    if (!config.is_object()) {
      throw Error(ErrorKind::kConfig, "cli", "config must be a JSON object");
    }
  }
  if (g.seed) config["seed"] = *g.seed;
  for (const auto &[key, value] : overrides.items()) {
    if (!value.is_null()) config[key] = value;
  }
  fs::create_directories(g.out);
  return RunContext(command, std::move(config), g.out);
}

void Finish(RunContext &ctx) { ctx.WriteManifest(); }

std::string GroupOf(const ingest::AliasConfig &cfg, const std::string &agent) {
  return cfg.GroupOf(agent);
}

std::vector<fs::path> HtmlFiles(const fs::path &input) {
  if (!fs::is_directory(input)) return {input};
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(input)) {
    std::string ext = text::Lower(entry.path().extension().string());
    if (entry.is_regular_file() && (ext == ".html" || ext == ".htm")) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

template <typename T>
std::map<std::string, std::vector<T>> ByContract(const std::vector<T> &items) {
  std::map<std::string, std::vector<T>> out;
  for (const T &item : items) out[item.contract_id].push_back(item);
  return out;
}

std::string PairKey(const std::string &sentence_id, const std::string &agent) {
  return sentence_id + '\x1f' + text::Lower(agent);
}

ordered_json SpanJson(const TypedSpan &s,
                      const std::vector<std::string> &tokens) {
  ordered_json j;
  j["type"] = TypeName(s.type);
  j["start"] = s.start;
  j["end"] = s.end;
  if (s.end < static_cast<int>(tokens.size())) {
    std::vector<std::string> words(tokens.begin() + s.start,
                                   tokens.begin() + s.end + 1);
    j["text"] = text::Lower(text::Join(words, " "));
  }
  return j;
}

ordered_json PredictionJson(const std::string &sentence_id,
                            const std::string &agent, const LabelSet &labels,
                            const std::vector<TypedSpan> &spans,
                            const std::vector<std::string> &tokens) {
  ordered_json j;
  j["sentence_id"] = sentence_id;
  j["agent"] = agent;
  j["labels"] = LabelNames(labels);
  ordered_json list = ordered_json::array();
  for (const TypedSpan &s : spans) list.push_back(SpanJson(s, tokens));
  j["spans"] = std::move(list);
  return j;
}

LabelSet LabelsFromSpans(const std::vector<TypedSpan> &spans) {
  LabelSet labels;
  for (const TypedSpan &s : spans) labels.insert(s.type);
  if (labels.empty()) labels.insert(DeonticType::kNone);
  return labels;
}

// ---------------------------------------------------------------- ingest

struct IngestOptions {
  std::string html;
  Opt contract_id;
  Opt completeness;
  bool heuristic = false;
};

void RunIngest(const IngestOptions &o, const GlobalOptions &g) {
  json overrides = json::object();
  if (o.completeness) overrides["completeness"] = *o.completeness;
  if (o.heuristic) overrides["completeness"] = "heuristic";
  RunContext ctx = MakeContext("ingest", g, overrides);
  if (!fs::exists(o.html)) {
    throw Error(ErrorKind::kIngest, "ingest",
                "input '" + o.html + "' not found");
  }
  ctx.AddInput(o.html);

  std::string source = ctx.config().value("completeness", "heuristic");
  ingest::CompletenessOracle oracle;
  if (source == "heuristic") {
    oracle = ingest::HeuristicCompleteness();
  } else {
    fs::path sidecar = ctx.Input(source, "", "parse adapter");
    ctx.AddInput(sidecar);
    oracle = ingest::CompletenessFromTable(
        lingrep::ReadCompletenessSidecar(sidecar));
  }
  std::vector<std::string> cues = ingest::DefaultDefinitionCues();
  if (ctx.config().contains("definition_cues")) {
    cues = ctx.config()["definition_cues"].get<std::vector<std::string>>();
  }
  ctx.Seal();

  std::vector<fs::path> files = HtmlFiles(o.html);
  if (o.contract_id && files.size() != 1) {
    throw Error(ErrorKind::kUsage, "cli",
                "--contract-id needs a single HTML file");
  }
  std::vector<ordered_json> provisions, discarded, sentences;
  for (const fs::path &file : files) {
    std::string cid = o.contract_id ? *o.contract_id : file.stem().string();
    auto extracted = ingest::ExtractProvisionsFromFile(file, cid);
    auto filtered = ingest::FilterDefinitions(extracted, cues);
    for (const auto &d : filtered.discarded) {
      ordered_json j = ingest::ToJson(d.provision);
      j["cue"] = d.cue;
      discarded.push_back(std::move(j));
    }
    for (const ingest::Provision &p :
         ingest::MergeBullets(filtered.kept, oracle)) {
      provisions.push_back(ingest::ToJson(p));
      for (const auto &s : ingest::SegmentSentences(p)) {
        sentences.push_back(ingest::ToJson(s));
      }
    }
  }
  ctx.WriteJsonl("provisions.jsonl", provisions);
  ctx.WriteJsonl("definitions.jsonl", discarded);
  ctx.WriteJsonl("sentences.jsonl", sentences);
  Finish(ctx);
}

// --------------------------------------------------------------- aliases

struct AliasesOptions {
  Opt provisions;
  Opt sentences;
  Opt entities;
};

void RunAliases(const AliasesOptions &o, const GlobalOptions &g) {
  RunContext ctx = MakeContext("aliases", g);
  fs::path prov_path = ctx.Input(o.provisions, "provisions.jsonl", "ingest");
  fs::path sent_path = ctx.Input(o.sentences, "sentences.jsonl", "ingest");
  ctx.AddInput(prov_path);
  ctx.AddInput(sent_path);
  std::optional<fs::path> entity_path;
  if (o.entities) {
    entity_path = ctx.Input(o.entities, "", "parse adapter");
    ctx.AddInput(*entity_path);
  }
  ingest::AliasConfig cfg = ctx.Aliases();
  ctx.Seal();

  std::vector<ingest::Provision> provisions;
  for (const json &j : io::ReadJsonLinesFile(prov_path)) {
    provisions.push_back(ingest::ProvisionFromJson(j));
  }
  std::vector<ingest::SentenceRecord> sentences;
  for (const json &j : io::ReadJsonLinesFile(sent_path)) {
    sentences.push_back(ingest::SentenceRecordFromJson(j));
  }
  std::map<std::string, std::vector<ingest::EntityMention>> mentions;
  if (entity_path) {
    for (const json &j : io::ReadJsonLinesFile(*entity_path)) {
      mentions[j.value("contract_id", "")].push_back(
          ingest::EntityMentionFromJson(j));
    }
  }

  // Frequencies are counted over the whole corpus; each contract then keeps
  // the selected aliases it defines, plus the configured overrides.
  std::vector<ingest::AliasCandidate> all_candidates;
  std::map<std::string, std::set<std::string>> defined;
  auto provisions_by_contract = ByContract(provisions);
  for (const auto &[cid, contract] : provisions_by_contract) {
    std::vector<ingest::EntityMention> m =
        entity_path ? mentions[cid]
                    : ingest::FallbackEntityMentions(contract, cfg.window);
    for (auto &c : ingest::FindAliasCandidates(contract, m, cfg)) {
      defined[cid].insert(text::Lower(c.alias));
      all_candidates.push_back(std::move(c));
    }
  }
  ingest::AliasSelection sel = ingest::SelectAliases(all_candidates, cfg);
  for (const std::string &w : sel.warnings) {
    std::cerr << "warning [ingest]: " << w << '\n';
  }
  std::set<std::string> overrides;
  for (const std::string &a : cfg.overrides) overrides.insert(text::Lower(a));

  auto sentences_by_contract = ByContract(sentences);
  std::vector<ordered_json> alias_lines, agent_lines;
  for (const auto &[cid, contract] : provisions_by_contract) {
    std::vector<ingest::AgentAlias> own;
    for (const ingest::AgentAlias &a : sel.aliases) {
      std::string key = text::Lower(a.alias);
      if (!defined[cid].contains(key) && !overrides.contains(key)) continue;
      own.push_back(a);
      ordered_json j;
      j["contract_id"] = cid;
      ordered_json fields = ingest::ToJson(a);
      for (const auto &[k, v] : fields.items()) j[k] = v;
      alias_lines.push_back(std::move(j));
    }
    for (const auto &s : sentences_by_contract[cid]) {
      for (const auto &as : ingest::ExpandPerAgent(s, own)) {
        agent_lines.push_back(ingest::ToJson(as));
      }
    }
  }
  ctx.WriteJsonl("aliases.jsonl", alias_lines);
  ctx.WriteJsonl("agent_sentences.jsonl", agent_lines);
  Finish(ctx);
}

// --------------------------------------------------------- contract-type

struct ContractTypeOptions {
  Opt provisions;
  int window = 20;
};

void RunContractType(const ContractTypeOptions &o, const GlobalOptions &g) {
  RunContext ctx = MakeContext("contract-type", g,
                               {{"contract_type_window", o.window}});
  fs::path path = ctx.Input(o.provisions, "provisions.jsonl", "ingest");
  ctx.AddInput(path);
  ctx.Seal();
  std::vector<ingest::Provision> provisions;
  for (const json &j : io::ReadJsonLinesFile(path)) {
    provisions.push_back(ingest::ProvisionFromJson(j));
  }
  int window = ctx.config().value("contract_type_window", 20);
  std::vector<ordered_json> lines;
  for (const auto &[cid, contract] : ByContract(provisions)) {
    ordered_json j;
    j["contract_id"] = cid;
    auto type = ingest::DetectContractType(contract, window);
    j["contract_type"] = type ? json(*type) : json(nullptr);
    lines.push_back(std::move(j));
  }
  ctx.WriteJsonl("contract_types.jsonl", lines);
  Finish(ctx);
}

// ---------------------------------------------------------- parse-import

struct ParseImportOptions {
  std::vector<std::string> conllu;
  Opt sentences;
  Opt completeness;
};

void RunParseImport(const ParseImportOptions &o, const GlobalOptions &g) {
  RunContext ctx = MakeContext("parse-import", g);
  for (const std::string &f : o.conllu) {
    ctx.AddInput(ctx.Input(f, "", "parse adapter"));
  }
  std::map<std::string, std::string> texts;
  fs::path default_sentences = ctx.out_dir() / "sentences.jsonl";
  if (o.sentences || fs::exists(default_sentences)) {
    fs::path path = ctx.Input(o.sentences, "sentences.jsonl", "ingest");
    ctx.AddInput(path);
    for (const json &j : io::ReadJsonLinesFile(path)) {
      texts[j.at("sentence_id").get<std::string>()] =
          j.at("text").get<std::string>();
    }
  }
  std::map<std::string, bool> complete;
  if (o.completeness) {
    fs::path path = ctx.Input(o.completeness, "", "parse adapter");
    ctx.AddInput(path);
    complete = lingrep::ReadCompletenessSidecar(path);
  }
  const lingrep::LabelMap &labels = ctx.Labels();
  ctx.Seal();

  std::vector<ordered_json> lines;
  std::set<std::string> seen;
  for (const std::string &f : o.conllu) {
    std::ifstream in(f, std::ios::binary);
    for (lingrep::ParsedSentence &s : lingrep::ReadConllu(in, f)) {
      if (!seen.insert(s.sentence_id).second) {
        throw Error(ErrorKind::kValidation, "lingrep",
                    "duplicate sentence '" + s.sentence_id + "'");
      }
      lingrep::NormalizeLabels(s, labels);
      auto t = texts.find(s.sentence_id);
      std::string sentence_text = t != texts.end() ? t->second : s.text;
      if (!sentence_text.empty()) {
        try {
          s = lingrep::AlignTokens(sentence_text, std::move(s));
        } catch (const Error &e) {
          throw Error(e.kind(), "lingrep",
                      "sentence '" + s.sentence_id + "': " + e.what());
        }
      }
      auto c = complete.find(s.sentence_id);
      if (c != complete.end()) s.complete = c->second;
      lines.push_back(lingrep::ToJson(s));
    }
  }
  ctx.WriteJsonl("parses.jsonl", lines);
  Finish(ctx);
}

// ---------------------------------------------------------------- extract

struct ExtractOptions {
  Opt parses;
  Opt aliases;
  Opt pairs;
  Opt lexicon;
  int threads = 0;
};

struct Pair {
  std::string sentence_id;
  std::string agent;
};

std::string AgentField(const json &j) {
  const json &a = j.at("agent");
  return a.is_string() ? a.get<std::string>() : a.at("alias").get<std::string>();
}

void RunExtract(const ExtractOptions &o, const GlobalOptions &g) {
  json overrides = json::object();
  if (o.lexicon) overrides["lexicon"] = *o.lexicon;
  RunContext ctx = MakeContext("extract", g, overrides);
  fs::path parse_path = ctx.Input(o.parses, "parses.jsonl", "parse-import");
  ctx.AddInput(parse_path);
  std::optional<fs::path> alias_path;
  if (!o.pairs || o.aliases ||
      fs::exists(ctx.out_dir() / "aliases.jsonl")) {
    alias_path = ctx.Input(o.aliases, "aliases.jsonl", "aliases");
    ctx.AddInput(*alias_path);
  }
  std::optional<fs::path> pair_path;
  if (o.pairs) {
    pair_path = ctx.Input(o.pairs, "", "");
    ctx.AddInput(*pair_path);
  }
  if (ctx.config().contains("lexicon")) {
    ctx.AddInput(ctx.config()["lexicon"].get<std::string>());
  }
  const rules::TriggerLexicon &lexicon = ctx.Lexicon();
  ingest::AliasConfig cfg = ctx.Aliases();
  ctx.Seal();

  std::vector<lingrep::ParsedSentence> parses;
  for (const json &j : io::ReadJsonLinesFile(parse_path)) {
    parses.push_back(lingrep::ParsedSentenceFromJson(j));
  }
  std::map<std::string, std::vector<ingest::AgentAlias>> contract_aliases;
  std::vector<ingest::AgentAlias> all_aliases;
  if (alias_path) {
    std::set<std::string> seen;
    for (const json &j : io::ReadJsonLinesFile(*alias_path)) {
      ingest::AgentAlias a = ingest::AgentAliasFromJson(j);
      contract_aliases[j.value("contract_id", "")].push_back(a);
      if (seen.insert(text::Lower(a.alias)).second) all_aliases.push_back(a);
    }
  }
  std::map<std::string, std::vector<std::string>> pair_agents;
  std::vector<Pair> pairs;
  if (pair_path) {
    std::set<std::string> seen;
    for (const json &j : io::ReadJsonLinesFile(*pair_path)) {
      Pair p{j.at("sentence_id").get<std::string>(), AgentField(j)};
      if (!seen.insert(PairKey(p.sentence_id, p.agent)).second) continue;
      pair_agents[p.sentence_id].push_back(p.agent);
      pairs.push_back(std::move(p));
    }
  }

  auto aliases_for = [&](const lingrep::ParsedSentence &s) {
    const std::vector<ingest::AgentAlias> *best = nullptr;
    std::size_t best_len = 0;
    for (const auto &[cid, list] : contract_aliases) {
      if (cid.size() >= best_len && s.sentence_id.size() > cid.size() &&
          s.sentence_id.compare(0, cid.size(), cid) == 0 &&
          s.sentence_id[cid.size()] == ':') {
        best = &list;
        best_len = cid.size();
      }
    }
    std::vector<ingest::AgentAlias> out = best ? *best : all_aliases;
    auto extra = pair_agents.find(s.sentence_id);
    if (extra != pair_agents.end()) {
      for (const std::string &agent : extra->second) {
        bool known = std::any_of(out.begin(), out.end(), [&](const auto &a) {
          return text::EqualsIgnoreCase(a.alias, agent);
        });
        if (!known) out.push_back({agent, GroupOf(cfg, agent), 0});
      }
    }
    return out;
  };

  struct Result {
    std::vector<ingest::AgentAlias> aliases;
    std::vector<rules::Extraction> extractions;
  };
  std::vector<Result> results(parses.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < parses.size(); i += step) {
      results[i].aliases = aliases_for(parses[i]);
      try {
        results[i].extractions =
            rules::ExtractSentence(parses[i], lexicon, results[i].aliases);
      } catch (const Error &e) {
        throw Error(e.kind(), "rules",
                    "sentence '" + parses[i].sentence_id + "': " + e.what());
      }
    }
  };
  unsigned n_threads =
      o.threads > 0 ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min<unsigned>(n_threads, std::max<std::size_t>(parses.size(), 1));
  std::vector<std::exception_ptr> errors(n_threads);
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < n_threads; ++t) {
    workers.emplace_back([&, t] {
      try {
        work(t, n_threads);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (std::thread &w : workers) w.join();
  for (const auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::map<std::string, std::size_t> index;
  std::vector<ordered_json> extraction_lines;
  for (std::size_t i = 0; i < parses.size(); ++i) {
    index[parses[i].sentence_id] = i;
    ordered_json j;
    j["sentence_id"] = parses[i].sentence_id;
    ordered_json list = ordered_json::array();
    for (const auto &e : results[i].extractions) list.push_back(rules::ToJson(e));
    j["extractions"] = std::move(list);
    extraction_lines.push_back(std::move(j));
  }

  if (!pair_path) {
    for (std::size_t i = 0; i < parses.size(); ++i) {
      ingest::SentenceRecord rec;
      rec.sentence_id = parses[i].sentence_id;
      rec.text = parses[i].text.empty()
                     ? text::Join(parses[i].Surfaces(), " ")
                     : parses[i].text;
      for (const auto &as : ingest::ExpandPerAgent(rec, results[i].aliases)) {
        pairs.push_back({rec.sentence_id, as.agent.alias});
      }
    }
  }
  std::vector<ordered_json> predictions;
  long long missing = 0;
  for (const Pair &p : pairs) {
    auto it = index.find(p.sentence_id);
    if (it == index.end()) {
      ++missing;
      predictions.push_back(PredictionJson(
          p.sentence_id, p.agent, {DeonticType::kNone}, {}, {}));
      continue;
    }
    const Result &r = results[it->second];
    predictions.push_back(PredictionJson(
        p.sentence_id, p.agent, rules::ToMultilabel(r.extractions, p.agent),
        rules::ToSpans(r.extractions, p.agent),
        parses[it->second].Surfaces()));
  }
  if (missing > 0) {
    std::cerr << "warning [rules]: " << missing
              << " pair(s) without a parse predicted as None\n";
  }
  ctx.WriteJsonl("extractions.jsonl", extraction_lines);
  ctx.WriteJsonl("predictions.jsonl", predictions);
  Finish(ctx);
}

// --------------------------------------------------------------- baseline

struct BaselineOptions {
  Opt train;
  std::string test;
};

void RunMajorityCls(const BaselineOptions &o, const GlobalOptions &g) {
  RunContext ctx = MakeContext("baseline-majority-cls", g);
  if (!o.train) {
    throw Error(ErrorKind::kUsage, "cli", "majority-cls needs --train");
  }
  fs::path train = ctx.Input(o.train, "", "");
  fs::path test = ctx.Input(o.test, "", "");
  ctx.AddInput(train);
  ctx.AddInput(test);
  ingest::AliasConfig cfg = ctx.Aliases();
  ctx.Seal();

  rules::MajorityClassBaseline baseline;
  for (const auto &r : corpus::ReadCorpusFile(train)) {
    baseline.Add(GroupOf(cfg, r.agent), r.labels);
  }
  std::vector<ordered_json> lines;
  for (const auto &r : corpus::ReadCorpusFile(test)) {
    try {
      lines.push_back(PredictionJson(r.sentence_id, r.agent,
                                     baseline.Predict(GroupOf(cfg, r.agent)),
                                     {}, {}));
    } catch (const Error &e) {
      throw Error(e.kind(), "rules",
                  "record '" + r.sentence_id + "': " + e.what());
    }
  }
  ordered_json counts = ordered_json::object();
  for (const auto &[group, c] : baseline.counts()) {
    ordered_json row;
    for (DeonticType t : kAllTypes) {
      row[std::string(TypeName(t))] = c[static_cast<int>(t)];
    }
    row["majority"] = TypeName(rules::MajorityType(c));
    counts[group] = std::move(row);
  }
  ctx.WriteJsonl("predictions_majority_cls.jsonl", lines);
  ctx.WriteJson("majority_cls_counts.json", {{"groups", counts}});
  Finish(ctx);
}

void RunMajoritySpan(const BaselineOptions &o, const GlobalOptions &g) {
  RunContext ctx = MakeContext("baseline-majority-span", g);
  fs::path test = ctx.Input(o.test, "", "");
  ctx.AddInput(test);
  ingest::AliasConfig cfg = ctx.Aliases();
  rules::ShallTypeMap types = rules::DefaultShallTypes();
  if (ctx.config().contains("shall_types")) {
    types.clear();
    for (const auto &[group, name] : ctx.config()["shall_types"].items()) {
      types[group] = ParseTypeOrThrow(name.get<std::string>());
    }
  }
  ctx.Seal();
  std::vector<ordered_json> lines;
  for (const auto &r : corpus::ReadCorpusFile(test)) {
    if (!r.tokens) {
      throw Error(ErrorKind::kValidation, "rules",
                  "record '" + r.sentence_id + "' has no tokens");
    }
    auto spans = rules::TagsToSpans(
        rules::MajoritySpanBaseline(*r.tokens, GroupOf(cfg, r.agent), types));
    lines.push_back(PredictionJson(r.sentence_id, r.agent,
                                   LabelsFromSpans(spans), spans, *r.tokens));
  }
  ctx.WriteJsonl("predictions_majority_span.jsonl", lines);
  Finish(ctx);
}

// ------------------------------------------------------ annotation tools

struct CorpusOptions {
  std::string input;
};

void RunMerge(const CorpusOptions &o, const GlobalOptions &g) {
  RunContext ctx = MakeContext("merge-annotations", g);
  fs::path path = ctx.Input(o.input, "", "");
  ctx.AddInput(path);
  ctx.Seal();
  auto results = corpus::MergeAnnotations(corpus::ReadCorpusFile(path));
  std::vector<ordered_json> merged, log;
  long long kept = 0, flagged = 0;
  for (const auto &m : results) {
    ordered_json j;
    j["sentence_id"] = m.sentence_id;
    j["agent"] = m.agent;
    j["status"] = m.merged ? "merged" : "discarded";
    j["flagged"] = m.flagged;
    ordered_json votes = ordered_json::object();
    for (DeonticType t : kAllTypes) {
      votes[std::string(TypeName(t))] = m.votes[static_cast<int>(t)];
    }
    j["votes"] = std::move(votes);
    log.push_back(std::move(j));
    if (m.merged) {
      ++kept;
      merged.push_back(corpus::ToJson(*m.merged));
    }
    if (m.flagged) ++flagged;
  }
  ordered_json report;
  report["groups"] = results.size();
  report["merged"] = kept;
  report["discarded"] = static_cast<long long>(results.size()) - kept;
  report["flagged"] = flagged;
  ctx.WriteJsonl("merged.jsonl", merged);
  ctx.WriteJsonl("merge_log.jsonl", log);
  ctx.WriteJson("merge_report.json", report);
  Finish(ctx);
}

void RunAgreement(const CorpusOptions &o, const GlobalOptions &g) {
  RunContext ctx = MakeContext("agreement", g);
  fs::path path = ctx.Input(o.input, "", "");
  ctx.AddInput(path);
  ctx.Seal();
  corpus::AgreementReport r =
      corpus::ComputeAgreement(corpus::ReadCorpusFile(path));
  auto value = [](const std::optional<double> &v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
  };
  ordered_json j;
  j["items"] = r.items;
  j["annotators"] = r.annotators;
  ordered_json per_type = ordered_json::object();
  for (DeonticType t : kAllTypes) {
    per_type[std::string(TypeName(t))] = value(r.per_type[static_cast<int>(t)]);
  }
  j["per_type_alpha"] = std::move(per_type);
  j["mean_type_alpha"] = value(r.mean_type_alpha);
  j["token_alpha"] = value(r.token_alpha);
  j["seed"] = ctx.seed();
  ctx.WriteJson("agreement.json", j);
  Finish(ctx);
}

void RunSplit(const CorpusOptions &o, const GlobalOptions &g) {
  RunContext ctx = MakeContext("split", g);
  fs::path path = ctx.Input(o.input, "", "");
  ctx.AddInput(path);
  corpus::SplitConfig cfg;
  cfg.seed = ctx.seed();
  if (ctx.config().contains("split")) {
    const json &s = ctx.config()["split"];
    if (s.contains("ratios")) {
      auto r = s["ratios"].get<std::vector<double>>();
      if (r.size() != corpus::kNumSplits) {
        throw Error(ErrorKind::kConfig, "corpus",
                    "split.ratios needs three values");
      }
      std::copy(r.begin(), r.end(), cfg.ratios.begin());
    }
    if (s.contains("pinned")) {
      for (const auto &[cid, name] : s["pinned"].items()) {
        auto split = corpus::ParseSplit(name.get<std::string>());
        if (!split) {
          throw Error(ErrorKind::kConfig, "corpus",
                      "unknown split for pinned contract '" + cid + "'");
        }
        cfg.pinned[cid] = *split;
      }
    }
  }
  ctx.Seal();
  auto records = corpus::ReadCorpusFile(path);
  auto assignment = corpus::SplitByContract(records, cfg);
  std::vector<ordered_json> lines, assign;
  for (const auto &r : corpus::ApplySplits(records, assignment)) {
    lines.push_back(corpus::ToJson(r));
  }
  for (const auto &[cid, split] : assignment) {
    assign.push_back({{"contract_id", cid}, {"split", SplitName(split)}});
  }
  ctx.WriteJsonl("corpus_split.jsonl", lines);
  ctx.WriteJsonl("split_assignment.jsonl", assign);
  Finish(ctx);
}

struct StatsOptions {
  std::string input;
  int top_k = 10;
};

void RunStats(const StatsOptions &o, const GlobalOptions &g) {
  RunContext ctx = MakeContext("stats", g, {{"top_k", o.top_k}});
  fs::path path = ctx.Input(o.input, "", "");
  ctx.AddInput(path);
  ingest::AliasConfig cfg = ctx.Aliases();
  ctx.Seal();
  auto report = corpus::ComputeStats(
      corpus::ReadCorpusFile(path), ctx.config().value("top_k", 10),
      [&cfg](const std::string &a) { return cfg.GroupOf(a); });
  ordered_json j = corpus::ToJson(report);
  j["seed"] = ctx.seed();
  ctx.WriteJson("stats.json", j);
  ctx.WriteCsv("split_counts.csv", corpus::SplitCountsCsv(report));
  ctx.WriteCsv("top_triggers.csv", corpus::TopTriggersCsv(report));
  ctx.WriteCsv("distribution.csv", corpus::DistributionCsv(report));
  Finish(ctx);
}

struct ExportOptionsCli {
  std::string input;
  Opt conditioning;
  Opt anonymize;
};

void RunExport(const ExportOptionsCli &o, const GlobalOptions &g) {
  json overrides = json::object();
  if (o.conditioning) overrides["conditioning"] = *o.conditioning;
  if (o.anonymize) overrides["anonymize"] = *o.anonymize;
  RunContext ctx = MakeContext("export", g, overrides);
  fs::path path = ctx.Input(o.input, "", "");
  ctx.AddInput(path);
  ingest::AliasConfig cfg = ctx.Aliases();
  corpus::ExportOptions opts;
  std::string cond = ctx.config().value("conditioning", "agent-token");
  std::string anon = ctx.config().value("anonymize", "off");
  auto c = corpus::ParseConditioning(cond);
  auto a = corpus::ParseAnonymize(anon);
  if (!c) throw Error(ErrorKind::kConfig, "corpus", "unknown conditioning '" + cond + "'");
  if (!a) throw Error(ErrorKind::kConfig, "corpus", "unknown anonymize mode '" + anon + "'");
  opts.conditioning = *c;
  opts.anonymize = *a;
  opts.seed = ctx.seed();
  opts.group_of = [cfg](const std::string &agent) { return cfg.GroupOf(agent); };
  if (ctx.config().contains("extra_aliases")) {
    opts.extra_aliases =
        ctx.config()["extra_aliases"].get<std::vector<std::string>>();
  }
  ctx.Seal();
  std::vector<ordered_json> lines;
  for (const auto &r : corpus::ExportConditioned(corpus::ReadCorpusFile(path), opts)) {
    lines.push_back(corpus::ToJson(r));
  }
  ctx.WriteJsonl("export.jsonl", lines);
  Finish(ctx);
}

struct ImportOptions {
  std::string input;
  Opt mapping;
};

void RunImport(const ImportOptions &o, const GlobalOptions &g) {
  RunContext ctx = MakeContext("import", g);
  fs::path path = ctx.Input(o.input, "", "");
  ctx.AddInput(path);
  json mapping_json;
  if (o.mapping) {
    fs::path mp = ctx.Input(o.mapping, "", "");
    ctx.AddInput(mp);
    mapping_json = json::parse(io::ReadFile(mp));
  } else if (ctx.config().contains("import_mapping")) {
    mapping_json = ctx.config()["import_mapping"];
  } else {
    throw Error(ErrorKind::kConfig, "corpus",
                "import needs --mapping or config key import_mapping");
  }
  corpus::ImportMapping mapping = corpus::ImportMappingFromJson(mapping_json);
  ctx.Seal();
  std::vector<ordered_json> lines;
  int line = 0;
  for (const json &j : io::ReadJsonLinesFile(path)) {
    ++line;
    try {
      corpus::AnnotationRecord r = corpus::ImportRecord(j, mapping);
      corpus::ValidateRecord(r);
      lines.push_back(corpus::ToJson(r));
    } catch (const Error &e) {
      throw Error(e.kind(), "corpus",
                  path.string() + ": record " + std::to_string(line) + ": " +
                      e.what());
    }
  }
  ctx.WriteJsonl("imported.jsonl", lines);
  Finish(ctx);
}

// ------------------------------------------------------------- evaluation

struct EvalOptions {
  std::string pred;
  std::string gold;
  bool labeled = false;
  bool unlabeled = false;
};

struct Matched {
  std::vector<const corpus::AnnotationRecord *> gold;
  std::vector<const corpus::AnnotationRecord *> pred;  // null when missing
  long long missing = 0;
  long long unmatched = 0;
};

Matched MatchPredictions(const std::vector<corpus::AnnotationRecord> &preds,
                         const std::vector<corpus::AnnotationRecord> &golds) {
  std::map<std::string, const corpus::AnnotationRecord *> by_key;
  for (const auto &p : preds) {
    if (!by_key.emplace(PairKey(p.sentence_id, p.agent), &p).second) {
      throw Error(ErrorKind::kValidation, "eval",
                  "duplicate prediction for '" + p.sentence_id + "' / '" +
                      p.agent + "'");
    }
  }
  Matched m;
  std::set<std::string> used;
  for (const auto &gold : golds) {
    std::string key = PairKey(gold.sentence_id, gold.agent);
    auto it = by_key.find(key);
    m.gold.push_back(&gold);
    m.pred.push_back(it == by_key.end() ? nullptr : it->second);
    if (it == by_key.end()) ++m.missing;
    used.insert(key);
  }
  m.unmatched = static_cast<long long>(preds.size()) -
                static_cast<long long>(std::count_if(
                    preds.begin(), preds.end(), [&](const auto &p) {
                      return used.contains(PairKey(p.sentence_id, p.agent));
                    }));
  return m;
}

// Rows: every agent group in gold order of name, then "Both" pooled.
std::vector<std::pair<std::string, std::vector<std::size_t>>> EvalRows(
    const Matched &m, const ingest::AliasConfig &cfg) {
  std::map<std::string, std::vector<std::size_t>> groups;
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < m.gold.size(); ++i) {
    groups[cfg.GroupOf(m.gold[i]->agent)].push_back(i);
    all.push_back(i);
  }
  std::vector<std::pair<std::string, std::vector<std::size_t>>> rows(
      groups.begin(), groups.end());
  rows.emplace_back("Both", std::move(all));
  return rows;
}

void LoadEvalInputs(RunContext &ctx, const EvalOptions &o,
                    std::vector<corpus::AnnotationRecord> &preds,
                    std::vector<corpus::AnnotationRecord> &golds) {
  fs::path pred = ctx.Input(o.pred, "", "extract or baseline");
  fs::path gold = ctx.Input(o.gold, "", "");
  ctx.AddInput(pred);
  ctx.AddInput(gold);
  ctx.Seal();
  preds = corpus::ReadCorpusFile(pred, /*validate=*/false);
  golds = corpus::ReadCorpusFile(gold);
}

void RunEvaluateCls(const EvalOptions &o, const GlobalOptions &g) {
  RunContext ctx = MakeContext("evaluate-cls", g);
  ingest::AliasConfig cfg = ctx.Aliases();
  eval::ClassificationOptions opts;
  if (ctx.config().contains("metrics")) {
    opts.macro_all_classes =
        ctx.config()["metrics"].value("macro_all_classes", false);
  }
  std::vector<corpus::AnnotationRecord> preds, golds;
  LoadEvalInputs(ctx, o, preds, golds);
  Matched m = MatchPredictions(preds, golds);
  std::vector<std::pair<std::string, eval::MetricsReport>> rows;
  ordered_json report;
  for (const auto &[name, idx] : EvalRows(m, cfg)) {
    std::vector<LabelSet> p, gl;
    for (std::size_t i : idx) {
      gl.push_back(m.gold[i]->labels);
      p.push_back(m.pred[i] ? m.pred[i]->labels
                            : LabelSet{DeonticType::kNone});
    }
    rows.emplace_back(name, eval::ClassificationMetrics(p, gl, opts));
    report["rows"][name] = eval::ToJson(rows.back().second);
  }
  report["missing_predictions"] = m.missing;
  report["unmatched_predictions"] = m.unmatched;
  report["seed"] = ctx.seed();
  ctx.WriteJson("eval_cls.json", report);
  ctx.WriteCsv("eval_cls.csv", eval::ClassificationCsv(rows));
  Finish(ctx);
}

void RunEvaluateSpan(const EvalOptions &o, const GlobalOptions &g) {
  RunContext ctx = MakeContext("evaluate-span", g);
  ingest::AliasConfig cfg = ctx.Aliases();
  eval::SpanMetricsOptions opts;
  if (ctx.config().contains("metrics")) {
    opts.macro_all_types =
        ctx.config()["metrics"].value("macro_all_types", false);
  }
  bool labeled = o.labeled || !o.unlabeled;
  bool unlabeled = o.unlabeled || !o.labeled;
  std::vector<corpus::AnnotationRecord> preds, golds;
  LoadEvalInputs(ctx, o, preds, golds);
  Matched m = MatchPredictions(preds, golds);

  std::vector<rules::TagSequence> gold_tags(m.gold.size()),
      pred_tags(m.gold.size());
  for (std::size_t i = 0; i < m.gold.size(); ++i) {
    const auto &gold = *m.gold[i];
    if (!gold.tokens) {
      throw Error(ErrorKind::kValidation, "eval",
                  "gold record '" + gold.sentence_id + "' has no tokens");
    }
    int n = static_cast<int>(gold.tokens->size());
    try {
      gold_tags[i] = rules::SpansToTags(gold.spans, n);
      pred_tags[i] = rules::SpansToTags(
          m.pred[i] ? m.pred[i]->spans : std::vector<TypedSpan>{}, n);
    } catch (const Error &e) {
      throw Error(e.kind(), "eval",
                  "record '" + gold.sentence_id + "' / '" + gold.agent +
                      "': " + e.what());
    }
  }

  ordered_json report;
  std::vector<eval::SpanRow> rows;
  for (const auto &[name, idx] : EvalRows(m, cfg)) {
    std::vector<rules::TagSequence> p, gl;
    for (std::size_t i : idx) {
      p.push_back(pred_tags[i]);
      gl.push_back(gold_tags[i]);
    }
    eval::SpanRow row{name, {}, {}};
    row.labeled = eval::SpanMetrics(p, gl, eval::MetricMode::kSpanLabeled, opts);
    row.unlabeled =
        eval::SpanMetrics(p, gl, eval::MetricMode::kSpanUnlabeled, opts);
    if (labeled) report["rows"][name]["labeled"] = eval::ToJson(row.labeled);
    if (unlabeled) {
      report["rows"][name]["unlabeled"] = eval::ToJson(row.unlabeled);
    }
    rows.push_back(std::move(row));
  }
  report["missing_predictions"] = m.missing;
  report["unmatched_predictions"] = m.unmatched;
  report["seed"] = ctx.seed();
  ctx.WriteJson("eval_span.json", report);
  ctx.WriteCsv("eval_span.csv", eval::SpanCsv(rows));
  Finish(ctx);
}

struct RedflagOptions {
  std::string pred;
  std::string gold;
};

void RunRedflag(const RedflagOptions &o, const GlobalOptions &g) {
  RunContext ctx = MakeContext("redflag-eval", g);
  fs::path pred = ctx.Input(o.pred, "", "extract");
  fs::path gold = ctx.Input(o.gold, "", "");
  ctx.AddInput(pred);
  ctx.AddInput(gold);
  ctx.Seal();
  std::map<std::string, eval::AliasLabels> per_sentence;
  for (const auto &p : corpus::ReadCorpusFile(pred, /*validate=*/false)) {
    per_sentence[p.sentence_id][text::Lower(p.agent)] = p.labels;
  }
  std::vector<eval::AliasLabels> preds;
  std::vector<bool> golds;
  for (const json &j : io::ReadJsonLinesFile(gold)) {
    std::string id = j.at("sentence_id").get<std::string>();
    const json &flag = j.at("redflag");
    if (!flag.is_boolean()) {
      throw Error(ErrorKind::kParse, "eval",
                  "sentence '" + id + "': redflag must be a boolean");
    }
    auto it = per_sentence.find(id);
    preds.push_back(it == per_sentence.end() ? eval::AliasLabels{}
                                             : it->second);
    golds.push_back(flag.get<bool>());
  }
  ordered_json report = eval::ToJson(eval::RedflagMetrics(preds, golds));
  report["sentences"] = golds.size();
  report["seed"] = ctx.seed();
  ctx.WriteJson("redflag.json", report);
  Finish(ctx);
}

template <typename Options, typename Fn>
void Bind(CLI::App *sub, std::shared_ptr<Options> opts,
          const GlobalOptions &global, std::function<void()> &action, Fn fn) {
  sub->callback([opts, &global, &action, fn] {
    action = [opts, &global, fn] { fn(*opts, global); };
  });
}

}  // namespace

void RegisterCommands(CLI::App &app, const GlobalOptions &global,
                      std::function<void()> &action) {
  {
    auto o = std::make_shared<IngestOptions>();
    auto *sub = app.add_subcommand("ingest", "HTML contracts to provisions and sentences");
    sub->add_option("--html", o->html, "HTML file or directory")->required();
    sub->add_option("--contract-id", o->contract_id, "Contract id for a single file");
    auto *c = sub->add_option("--completeness", o->completeness,
                              "Completeness sidecar (provision_key, complete)");
    sub->add_flag("--completeness-heuristic", o->heuristic,
                  "Decide completeness with the built-in heuristic")
        ->excludes(c);
    Bind(sub, o, global, action, RunIngest);
  }
  {
    auto o = std::make_shared<AliasesOptions>();
    auto *sub = app.add_subcommand("aliases", "Agent alias extraction");
    sub->add_option("--provisions", o->provisions);
    sub->add_option("--sentences", o->sentences);
    sub->add_option("--entities", o->entities, "Entity mention sidecar");
    Bind(sub, o, global, action, RunAliases);
  }
  {
    auto o = std::make_shared<ContractTypeOptions>();
    auto *sub = app.add_subcommand("contract-type", "Detect contract types");
    sub->add_option("--provisions", o->provisions);
    sub->add_option("--window", o->window, "Provisions scanned")->check(CLI::PositiveNumber);
    Bind(sub, o, global, action, RunContractType);
  }
  {
    auto o = std::make_shared<ParseImportOptions>();
    auto *sub = app.add_subcommand("parse-import", "Import CoNLL-U parses");
    sub->add_option("--conllu", o->conllu, "CoNLL-U files")->required();
    sub->add_option("--sentences", o->sentences, "Sentence records for alignment");
    sub->add_option("--completeness", o->completeness, "Completeness sidecar keyed by sentence id");
    Bind(sub, o, global, action, RunParseImport);
  }
  {
    auto o = std::make_shared<ExtractOptions>();
    auto *sub = app.add_subcommand("extract", "Rule-based deontic extraction");
    sub->add_option("--parses", o->parses);
    sub->add_option("--aliases", o->aliases);
    sub->add_option("--pairs", o->pairs, "Sentence/agent pairs to predict");
    sub->add_option("--lexicon", o->lexicon, "Trigger lexicon TSV");
    sub->add_option("--threads", o->threads)->check(CLI::NonNegativeNumber);
    Bind(sub, o, global, action, RunExtract);
  }
  {
    auto *base = app.add_subcommand("baseline", "Majority baselines");
    base->require_subcommand(1);
    auto cls = std::make_shared<BaselineOptions>();
    auto *c = base->add_subcommand("majority-cls", "Majority class per agent group");
    c->add_option("--train", cls->train)->required();
    c->add_option("--test", cls->test)->required();
    Bind(c, cls, global, action, RunMajorityCls);
    auto span = std::make_shared<BaselineOptions>();
    auto *s = base->add_subcommand("majority-span", "Tag every 'shall'");
    s->add_option("--test", span->test)->required();
    Bind(s, span, global, action, RunMajoritySpan);
  }
  {
    auto o = std::make_shared<CorpusOptions>();
    auto *sub = app.add_subcommand("merge-annotations", "Majority-vote merge");
    sub->add_option("--annotations", o->input)->required();
    Bind(sub, o, global, action, RunMerge);
  }
  {
    auto o = std::make_shared<CorpusOptions>();
    auto *sub = app.add_subcommand("agreement", "Krippendorff's alpha");
    sub->add_option("--annotations", o->input)->required();
    Bind(sub, o, global, action, RunAgreement);
  }
  {
    auto o = std::make_shared<CorpusOptions>();
    auto *sub = app.add_subcommand("split", "Contract-level train/dev/test split");
    sub->add_option("--corpus", o->input)->required();
    Bind(sub, o, global, action, RunSplit);
  }
  {
    auto o = std::make_shared<StatsOptions>();
    auto *sub = app.add_subcommand("stats", "Corpus statistics");
    sub->add_option("--corpus", o->input)->required();
    sub->add_option("--top-k", o->top_k)->check(CLI::NonNegativeNumber);
    Bind(sub, o, global, action, RunStats);
  }
  {
    auto o = std::make_shared<ExportOptionsCli>();
    auto *sub = app.add_subcommand("export", "Agent-conditioned tagging export");
    sub->add_option("--corpus", o->input)->required();
    sub->add_option("--conditioning", o->conditioning)
        ->check(CLI::IsMember({"none", "agent-token"}));
    sub->add_option("--anonymize", o->anonymize)
        ->check(CLI::IsMember({"off", "consistent", "random"}));
    Bind(sub, o, global, action, RunExport);
  }
  {
    auto o = std::make_shared<ImportOptions>();
    auto *sub = app.add_subcommand("import", "Convert a foreign corpus via a field mapping");
    sub->add_option("--in", o->input)->required();
    sub->add_option("--mapping", o->mapping, "Mapping JSON");
    Bind(sub, o, global, action, RunImport);
  }
  {
    auto *ev = app.add_subcommand("evaluate", "Score predictions against gold");
    ev->require_subcommand(1);
    auto cls = std::make_shared<EvalOptions>();
    auto *c = ev->add_subcommand("cls", "Multi-label classification");
    c->add_option("--pred", cls->pred)->required();
    c->add_option("--gold", cls->gold)->required();
    Bind(c, cls, global, action, RunEvaluateCls);
    auto span = std::make_shared<EvalOptions>();
    auto *s = ev->add_subcommand("span", "Span extraction");
    s->add_option("--pred", span->pred)->required();
    s->add_option("--gold", span->gold)->required();
    s->add_flag("--labeled", span->labeled);
    s->add_flag("--unlabeled", span->unlabeled);
    Bind(s, span, global, action, RunEvaluateSpan);
  }
  {
    auto o = std::make_shared<RedflagOptions>();
    auto *sub = app.add_subcommand("redflag-eval", "Sentence-level red-flag scoring");
    sub->add_option("--pred", o->pred)->required();
    sub->add_option("--gold", o->gold)->required();
    Bind(sub, o, global, action, RunRedflag);
  }
}

int Main(int argc, char **argv) {
  CLI::App app("Deontic modality toolkit for contracts", "deontic");
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions global;
  app.add_option("--config", global.config, "JSON configuration file");
  app.add_option("--seed", global.seed, "Random seed");
  app.add_option("--out", global.out, "Output directory");
  std::function<void()> action;
  RegisterCommands(app, global, action);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (action) action();
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::kUsage:
        return 2;
      case ErrorKind::kDependency:
        return 3;
      default:
        return 1;
    }
  } catch (const std::exception &e) {
    std::cerr << "error: internal [cli]: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace deontic::tools

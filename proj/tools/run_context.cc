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

#include "run_context.h"

#include <chrono>
#include <ctime>
#include <sstream>

#include "deontic/error.h"
#include "deontic/io.h"
#include "deontic/rules/engine.h"

namespace deontic::tools {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

RunContext::RunContext(std::string command, json config, fs::path out_dir)
    : command_(std::move(command)),
      config_(std::move(config)),
      out_dir_(std::move(out_dir)) {}

std::uint64_t RunContext::seed() const {
  return config_.value("seed", static_cast<std::uint64_t>(0));
}

fs::path RunContext::Input(const std::optional<std::string> &flag,
                           const std::string &default_name,
                           const std::string &producer) const {
  fs::path path = flag ? fs::path(*flag) : out_dir_ / default_name;
  if (!fs::exists(path)) {
    throw Error(ErrorKind::kDependency, "cli",
                command_ + ": missing input '" + path.string() + "'" +
                    (producer.empty() ? "" : " (produced by '" + producer + "')"));
  }
  return path;
}

void RunContext::AddInput(const fs::path &path) {
  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto &entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const fs::path &f : files) AddInput(f);
    return;
  }
  inputs_[path.filename().string()] = io::Sha256Hex(io::ReadFile(path));
}

ingest::AliasConfig RunContext::Aliases() const {
  return config_.contains("aliases")
             ? ingest::AliasConfigFromJson(config_["aliases"])
             : ingest::AliasConfig{};
}

const rules::TriggerLexicon &RunContext::Lexicon() {
  if (!lexicon_) {
    std::string table;
    if (config_.contains("lexicon")) {
      fs::path path = config_["lexicon"].get<std::string>();
      table = io::ReadFile(path);
      lexicon_ = rules::ParseLexicon(table, path.string());
    } else {
      table = std::string(rules::DefaultLexiconText());
      lexicon_ = rules::DefaultLexicon();
    }
    lexicon_hash_ = io::Sha256Hex(table);
  }
  return *lexicon_;
}

const lingrep::LabelMap &RunContext::Labels() {
  if (!labels_) {
    labels_ = config_.contains("label_map")
                  ? config_["label_map"].get<lingrep::LabelMap>()
                  : lingrep::DefaultLabelMap();
  }
  return *labels_;
}

void RunContext::Seal() {
  // File-valued keys contribute only their file name; contents are hashed
  // under "inputs" and "lexicon_hash".
  json hashed = config_;
  for (const char *key : {"lexicon", "completeness"}) {
    if (hashed.contains(key) && hashed[key].is_string() &&
        hashed[key] != "heuristic") {
      hashed[key] = fs::path(hashed[key].get<std::string>()).filename().string();
    }
  }
  ordered_json m;
  m["command"] = command_;
  m["config_hash"] = io::Sha256Hex(hashed.dump());
  m["seed"] = seed();
  Lexicon();
  m["lexicon_hash"] = lexicon_hash_;
  m["policy_id"] = rules::kPolicyId;
  ordered_json labels = ordered_json::object();
  for (const auto &[from, to] : Labels()) labels[from] = to;
  m["label_map"] = std::move(labels);
  ordered_json inputs = ordered_json::object();
  for (const auto &[name, hash] : inputs_) inputs[name] = hash;
  m["inputs"] = std::move(inputs);
  manifest_hash_ = io::Sha256Hex(m.dump());
  m["manifest_hash"] = manifest_hash_;
  manifest_ = std::move(m);
}

void RunContext::WriteJsonl(const std::string &name,
                            const std::vector<ordered_json> &lines) const {
  std::vector<ordered_json> stamped = lines;
  for (ordered_json &line : stamped) line["manifest"] = manifest_hash_;
  io::WriteJsonLinesFile(out_dir_ / name, stamped);
}

void RunContext::WriteJson(const std::string &name, ordered_json value) const {
  value["manifest"] = manifest_hash_;
  io::WriteFile(out_dir_ / name, value.dump(2) + "\n");
}

void RunContext::WriteCsv(const std::string &name,
                          const std::string &csv) const {
  std::istringstream in(csv);
  std::ostringstream out;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    out << line << ',' << (header ? "manifest" : manifest_hash_) << '\n';
    header = false;
  }
  io::WriteFile(out_dir_ / name, out.str());
}

void RunContext::WriteManifest() const {
  ordered_json m = manifest_;
  std::time_t now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  char stamp[32];
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  m["created_at"] = stamp;
  io::WriteFile(out_dir_ / (command_ + ".manifest.json"), m.dump(2) + "\n");
}

}  // namespace deontic::tools

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

// Per-invocation state: effective configuration, run manifest and artifact
// writers that stamp every artifact with the manifest hash.

#ifndef DEONTIC_TOOLS_RUN_CONTEXT_H_
#define DEONTIC_TOOLS_RUN_CONTEXT_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "deontic/ingest/aliases.h"
#include "deontic/lingrep/parse.h"
#include "deontic/rules/lexicon.h"

namespace deontic::tools {

class RunContext {
 public:
  RunContext(std::string command, nlohmann::json config,
             std::filesystem::path out_dir);

  const std::string &command() const { return command_; }
  const nlohmann::json &config() const { return config_; }
  const std::filesystem::path &out_dir() const { return out_dir_; }
  std::uint64_t seed() const;

  // An input path: `flag` when given, else `default_name` inside the output
  // directory. Missing files throw Error(kDependency) naming the input and
  // the command that produces it.
  std::filesystem::path Input(const std::optional<std::string> &flag,
                              const std::string &default_name,
                              const std::string &producer) const;

  // Records an input's content hash for the manifest.
  void AddInput(const std::filesystem::path &path);

  ingest::AliasConfig Aliases() const;
  const rules::TriggerLexicon &Lexicon();
  const lingrep::LabelMap &Labels();

  // Fixes the manifest; call after all inputs are registered and before
  // writing artifacts.
  void Seal();
  const std::string &manifest_hash() const { return manifest_hash_; }

  void WriteJsonl(const std::string &name,
                  const std::vector<nlohmann::ordered_json> &lines) const;
  void WriteJson(const std::string &name, nlohmann::ordered_json value) const;
  // Appends a "manifest" column.
  void WriteCsv(const std::string &name, const std::string &csv) const;
  // Writes <command>.manifest.json with a timestamp.
  void WriteManifest() const;

 private:
  std::string command_;
  nlohmann::json config_;
  std::filesystem::path out_dir_;
  std::map<std::string, std::string> inputs_;  // file name -> sha256
  std::optional<rules::TriggerLexicon> lexicon_;
  std::string lexicon_hash_;
  std::optional<lingrep::LabelMap> labels_;
  nlohmann::ordered_json manifest_;
  std::string manifest_hash_;
};

}  // namespace deontic::tools

#endif  // DEONTIC_TOOLS_RUN_CONTEXT_H_
